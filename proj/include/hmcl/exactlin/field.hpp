#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hmcl {

// Field elements are GMP rationals. Over GF(p) they are kept as integers
// in [0, p); over Q they are in lowest terms (mpq_class canonical form).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// The ground field: either Q or GF(p) with p prime, p < 2^31.
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(std::uint64_t p);

    Field() = default;

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    // 0 for Q, p for GF(p).
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    // Canonical image of an arbitrary rational. Throws PreconditionError
    // when the denominator vanishes mod p.
    Scalar reduce(const mpq_class& q) const;
    Scalar from_int(long v) const { return reduce(mpq_class(v)); }
    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_canonical(const Scalar& a) const;

    // Parses "a", "-a" or "a/b" and reduces into the field.
    Scalar parse(const std::string& text) const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_ = Kind::Rationals;
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

// Renders a scalar as "a" or "a/b".
std::string to_string(const Scalar& s);

} // namespace hmcl

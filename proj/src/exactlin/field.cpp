#include "hmcl/exactlin/field.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t(1) << 31))
        throw InputError("prime field modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime(p))
        throw InputError("GF(p) requires a prime modulus, got " + std::to_string(p));
    return Field(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string Field::name() const
{
    if (is_rationals())
        return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

namespace {

mpz_class mod_p(const mpz_class& a, std::uint32_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
    return r;
}

mpz_class inverse_mod(const mpz_class& a, std::uint32_t p)
{
    mpz_class r, m(p);
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw PreconditionError("element not invertible in GF(" + std::to_string(p) + ")");
    return r;
}

} // namespace

Scalar Field::reduce(const mpq_class& q) const
{
    if (is_rationals()) {
        Scalar r(q);
        r.canonicalize();
        return r;
    }
    mpz_class den = mod_p(q.get_den(), p_);
    if (den == 0)
        throw PreconditionError("denominator " + q.get_den().get_str() + " vanishes in " + name());
    mpz_class num = mod_p(q.get_num(), p_);
    return Scalar(mod_p(num * inverse_mod(den, p_), p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    if (is_rationals())
        return a + b;
    mpz_class s = a.get_num() + b.get_num();
    if (s >= p_)
        s -= p_;
    return Scalar(s);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    if (is_rationals())
        return a - b;
    mpz_class s = a.get_num() - b.get_num();
    if (s < 0)
        s += p_;
    return Scalar(s);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (is_rationals())
        return a * b;
    return Scalar(mod_p(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar& a) const
{
    if (is_rationals())
        return -a;
    if (a == 0)
        return a;
    return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const
{
    if (sgn(a) == 0)
        throw PreconditionError("division by zero in " + name());
    if (is_rationals())
        return 1 / a;
    return Scalar(inverse_mod(a.get_num(), p_));
}

bool Field::is_canonical(const Scalar& a) const
{
    if (is_rationals())
        return mpz_cmp_ui(a.get_den().get_mpz_t(), 1) >= 0 &&
               gcd(a.get_num(), a.get_den()) == 1;
    return a.get_den() == 1 && a.get_num() >= 0 && a.get_num() < p_;
}

Scalar Field::parse(const std::string& text) const
{
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw InputError("malformed scalar '" + text + "'");
    if (q.get_den() == 0)
        throw InputError("zero denominator in scalar '" + text + "'");
    q.canonicalize();
    return reduce(q);
}

std::string to_string(const Scalar& s)
{
    return s.get_str();
}

} // namespace hmcl

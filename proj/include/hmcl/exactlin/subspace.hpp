#pragma once

#include "hmcl/exactlin/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hmcl {

// A linear subspace of k^n, stored canonically as its reduced row-echelon
// basis (pivot columns ascending). Two subspaces are equal iff their data is.
class Subspace {
public:
    Subspace() = default;
    // Span of the rows of `generators`.
    explicit Subspace(const Matrix& generators);
    static Subspace zero(Field field, std::size_t ambient_dim);
    static Subspace full(Field field, std::size_t ambient_dim);
    // Span of the given standard basis vectors.
    static Subspace coordinate(Field field, std::size_t ambient_dim, const std::vector<std::size_t>& axes);

    const Field& field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return pivots_.size(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    // Coordinates of v in the echelon basis; v must lie in the subspace.
    Vector coordinates(const Vector& v) const;
    // v minus its echelon projection: zero exactly when v is contained.
    Vector reduce(const Vector& v) const;

    // Vectors w with <w, s> = 0 for every s in the subspace.
    Subspace annihilator() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

// {v : m v = 0}
Subspace kernel_basis(const Matrix& m);
// Column span of m.
Subspace image_basis(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
// dim a - dim(a ∩ b)
std::size_t quotient_dim(const Subspace& a, const Subspace& b);
// {v : m v ∈ s}
Subspace preimage(const Matrix& m, const Subspace& s);
// Image of the subspace under m (span of m applied to the basis).
Subspace map_subspace(const Matrix& m, const Subspace& s);

struct SubspaceRelations {
    Subspace sum;
    Subspace intersection;
    bool contains;       // a ⊇ b
    std::size_t quotient_dim; // dim a/(a ∩ b)
};
SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b);

// Projection k^n -> k^n / K onto the complement spanned by the non-pivot
// standard basis vectors of K's echelon basis.
class QuotientMap {
public:
    explicit QuotientMap(Subspace kernel);

    std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
    std::size_t dim() const { return complement_.size(); }
    const Subspace& kernel() const { return kernel_; }
    // Standard basis indices whose images form the quotient basis.
    const std::vector<std::size_t>& complement() const { return complement_; }
    // dim() x ambient_dim() matrix.
    const Matrix& matrix() const { return projection_; }
    Vector project(const Vector& v) const { return projection_.apply(v); }
    // ambient_dim() x dim() matrix sending quotient basis vector i to its
    // standard representative.
    Matrix section() const;

private:
    Subspace kernel_;
    std::vector<std::size_t> complement_;
    Matrix projection_;
};

} // namespace hmcl

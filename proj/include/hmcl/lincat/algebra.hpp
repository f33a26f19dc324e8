#pragma once

#include "hmcl/lincat/category.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hmcl {

// The algebra of a finite category: direct sum of all hom spaces with the
// matrix-style product (composable pairs compose, others multiply to 0).
struct FlatAlgebra {
    Field field;
    std::vector<std::string> labels;
    // (y, x) of each basis element; empty for algebras not built from a category.
    std::vector<std::pair<std::size_t, std::size_t>> tags;
    // products[i * dim + j] = basis_i * basis_j
    std::vector<Vector> products;
    std::vector<Vector> idempotents;
    std::vector<std::string> idempotent_names;

    std::size_t dim() const { return labels.size(); }
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector unit() const;
    // Associativity on basis triples; throws InvariantError.
    void validate() const;
    // Idempotents are nonzero, orthogonal and sum to a two-sided unit;
    // throws PreconditionError otherwise.
    void check_idempotents() const;
};

FlatAlgebra flatten_to_algebra(const LinearCategory& c);

// Objects are the idempotents; hom(y, x) = e_y A e_x with the echelon basis
// of that subspace.
LinearCategory category_from_algebra(const FlatAlgebra& a);

// Replaces the objects in `subset` by one object (at the position of the
// first of them) whose endomorphisms are the algebra of the full
// subcategory. The default name joins the member names with '+'.
LinearCategory contract(const LinearCategory& c, const std::vector<std::size_t>& subset,
                        const std::optional<std::string>& name = std::nullopt);

// Replaces object x by one object per idempotent. Idempotents are vectors
// in hom(x, x) that must be orthogonal and sum to the identity. Default
// names are x.1, x.2, ...
LinearCategory expand(const LinearCategory& c, std::size_t x, const std::vector<Vector>& idempotents,
                      const std::vector<std::string>& names = {});

} // namespace hmcl

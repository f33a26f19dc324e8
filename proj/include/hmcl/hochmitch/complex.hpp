#pragma once

#include "hmcl/exactlin/subspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hmcl {

enum class Direction { Chain, Cochain };

// A finite complex with explicit bases in degrees 0..top().
//
// Chain: differentials[n] is d_n: C_n -> C_{n-1} for n = 0..N (d_0 maps to
// the zero space). Cochain: differentials[n] is d^n: C^n -> C^{n+1} for
// n = 0..N-1.
struct BasedComplex {
    Direction direction = Direction::Chain;
    Field field;
    std::vector<std::size_t> dims;
    std::vector<std::vector<std::string>> labels; // may be empty
    std::vector<Matrix> differentials;

    std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
    // Map leaving degree n, if it lies inside the truncation.
    const Matrix* outgoing(std::size_t n) const;
    // Map arriving at degree n, if it lies inside the truncation (the zero
    // map out of the zero space for cochain degree 0).
    std::optional<Matrix> incoming(std::size_t n) const;
    // Shapes and d o d = 0; throws InvariantError.
    void validate() const;
};

struct DegreeHomology {
    std::size_t degree = 0;
    std::size_t dim = 0;
    Subspace cycles;
    Subspace boundaries;
    // Rows are cycles whose classes form the homology basis: the first
    // echelon basis vectors of the cycles that are independent modulo
    // boundaries.
    Matrix representatives;

    // Coordinates of the class of a cycle in the representative basis;
    // throws PreconditionError when v is not a cycle.
    Vector class_of(const Vector& v) const;

private:
    friend DegreeHomology degree_homology(const BasedComplex&, std::size_t);
    std::optional<QuotientMap> modulo_boundaries_;
    Matrix projected_reps_; // columns: representatives modulo boundaries
};

struct HomologyResult {
    Direction direction = Direction::Chain;
    std::vector<DegreeHomology> degrees;
    std::vector<std::size_t> dims() const;
};

DegreeHomology degree_homology(const BasedComplex& c, std::size_t n);

// Homology in every degree whose incoming and outgoing maps are both inside
// the truncation (0..top()-1).
HomologyResult homology(const BasedComplex& c);

} // namespace hmcl

#pragma once

#include "hmcl/bimod/bimodule.hpp"
#include "hmcl/hochmitch/complex.hpp"
#include "hmcl/lincat/algebra.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace hmcl {

// n composable basis morphisms x_1 -> x_2 -> ... -> x_{n+1}.
// objects = (x_1, ..., x_{n+1}); morphisms[i] is the basis index of c_{i+1}
// in hom(x_{i+2}, x_{i+1}).
struct NerveSequence {
    std::vector<std::uint32_t> objects;
    std::vector<std::uint32_t> morphisms;
    friend auto operator<=>(const NerveSequence&, const NerveSequence&) = default;
};

// All sequences of n composable basis morphisms (for n = 0: one per object).
std::vector<NerveSequence> nerve_sequences(const LinearCategory& c, std::size_t n);

// Dimension of the k-nerve of degree n; degree 0 is the sum of the
// endomorphism spaces.
std::size_t nerve_dim(const LinearCategory& c, std::size_t n);

// Basis of C_n(C, M) or C^n(C, M): one element per nerve sequence and basis
// vector of the coefficient space, M(x_1, x_{n+1}) for chains and
// M(x_{n+1}, x_1) for cochains. Elements are grouped by sequence.
class TensorBasis {
public:
    TensorBasis(const Bimodule& m, std::size_t n, Direction direction);

    std::size_t degree() const { return degree_; }
    std::size_t size() const { return size_; }
    const std::vector<NerveSequence>& sequences() const { return sequences_; }
    std::size_t offset(std::size_t seq) const { return offsets_[seq]; }
    std::size_t coefficient_dim(std::size_t seq) const { return offsets_[seq + 1] - offsets_[seq]; }
    std::size_t sequence_index(const NerveSequence& s) const;
    std::size_t index(const NerveSequence& s, std::size_t coefficient) const
    {
        return offsets_[sequence_index(s)] + coefficient;
    }
    // Sequence of the basis element at position i.
    std::size_t sequence_of(std::size_t i) const;
    std::vector<std::string> labels(const Bimodule& m) const;

private:
    std::size_t degree_;
    Direction direction_;
    std::vector<NerveSequence> sequences_;
    std::map<NerveSequence, std::size_t> lookup_;
    std::vector<std::size_t> offsets_;
    std::size_t size_ = 0;
};

struct HochschildComplex {
    BasedComplex complex;
    std::vector<TensorBasis> bases;
};

// Chain complex C_n = M (x) N_n, degrees 0..max_degree, with
// d(m; c_n, ..., c_1) = (m c_n; c_{n-1}, ..., c_1)
//   + sum_{i=1}^{n-1} (-1)^i (m; ..., c_{n-i+1} c_{n-i}, ...)
//   + (-1)^n (c_1 m; c_n, ..., c_2).
HochschildComplex chain_complex(const Bimodule& m, std::size_t max_degree);

// Cochain complex C^n = Hom(N_n, M), degrees 0..max_degree, with
// (df)(c_{n+1}, ..., c_1) = (-1)^{n+1} c_{n+1} f(c_n, ..., c_1)
//   + sum_{i=1}^{n} (-1)^i f(..., c_{i+1} c_i, ...) + f(c_{n+1}, ..., c_2) c_1.
HochschildComplex cochain_complex(const Bimodule& m, std::size_t max_degree);

// Dimensions of H_n (chains) or H^n (cochains) for n = 0..max_degree.
std::vector<std::size_t> hochschild_homology_dims(const Bimodule& m, std::size_t max_degree);
std::vector<std::size_t> hochschild_cohomology_dims(const Bimodule& m, std::size_t max_degree);

struct CenterResult {
    std::size_t dim = 0;
    // Rows are tuples (m_x) in the product of the endomorphism spaces, in
    // object order.
    Matrix basis;
};

// Tuples (m_x) with f m_x = m_y f for every morphism f: x -> y.
CenterResult center(const LinearCategory& c);

// Hom_k(A^{(x)n}, M) with the classical coboundary, M viewed as a bimodule
// over the flattened algebra. Refuses when some cochain space would exceed
// `size_cap` basis elements.
BasedComplex algebra_hochschild_cochain(const FlatAlgebra& a, const Bimodule& m, std::size_t max_degree,
                                        std::size_t size_cap = 200000);

} // namespace hmcl

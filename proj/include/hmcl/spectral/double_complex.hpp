#pragma once

#include "hmcl/covering/equivariant.hpp"
#include "hmcl/hochmitch/complex.hpp"

namespace hmcl {

// First-quadrant double complex truncated to 0 <= p <= P, 0 <= q <= Q, with
// anticommuting squares.
struct DoubleComplex {
    Field field;
    std::size_t P = 0;
    std::size_t Q = 0;
    std::vector<std::vector<std::size_t>> dims;       // [p][q]
    std::vector<std::vector<Matrix>> horizontal;      // [p][q]: D[p][q] -> D[p-1][q] (0 x dim at p = 0)
    std::vector<std::vector<Matrix>> vertical;        // [p][q]: D[p][q] -> D[p][q-1] (0 x dim at q = 0)

    // d^h d^h = 0, d^v d^v = 0 and d^h d^v + d^v d^h = 0; throws InvariantError.
    void validate() const;
    // Swaps the roles of p and q.
    DoubleComplex transposed() const;
};

// D[p][q] = k[G^p] (x) X_q: the bar complex of each X_q, with vertical maps
// (-1)^p (1 (x) d_q). Needs a chain complex X.
DoubleComplex bar_double_complex(const EquivariantComplex& x, std::size_t P);

// Total complex, degrees 0..P+Q. Tot_n lists the blocks D[p][n-p] in
// increasing p; offsets[n][p] is where block p starts (p = 0..P+1).
struct TotalComplex {
    BasedComplex complex;
    std::vector<std::vector<std::size_t>> offsets;
};

TotalComplex total_complex(const DoubleComplex& d);

enum class Filtration { Columns, Rows };

// E^r of the spectral sequence of the filtration, as a table in (p, q).
// E^r_{p,q} = cycles / boundaries, both inside D[p][q]; ranks[p][q] is the
// rank of d_r leaving (p, q). An entry is reliable when p + q + 1 <= min(P, Q):
// outside that window the truncation can change it.
struct SSPage {
    std::size_t r = 0;
    Filtration filtration = Filtration::Columns;
    std::size_t P = 0;
    std::size_t Q = 0;
    std::vector<std::vector<std::size_t>> dims;
    std::vector<std::vector<std::size_t>> ranks;
    std::vector<std::vector<bool>> reliable;
    std::vector<std::vector<Subspace>> cycles;
    std::vector<std::vector<Subspace>> boundaries;
};

bool reliable_entry(std::size_t P, std::size_t Q, std::size_t p, std::size_t q);

// Pages E^0, ..., E^{r_max}, computed from the filtered total complex:
// E^r_s = A(r, s) / (A(r-1, s-1) + d A(r-1, s+r-1)) with
// A(r, s) = {c in F_s : d c in F_{s-r}}.
std::vector<SSPage> spectral_pages(const DoubleComplex& d, Filtration f, std::size_t r_max);

// A page index after which every d_r vanishes on the truncation.
std::size_t limit_page_index(const DoubleComplex& d);

// First page index from which the dims never change again (within r_max).
std::size_t stable_from(const std::vector<SSPage>& pages);

// Sum over p + q = n of the page dims, for n = 0..P+Q.
std::vector<std::size_t> diagonal_sums(const SSPage& page);

} // namespace hmcl

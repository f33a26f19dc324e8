#pragma once

#include "hmcl/covering/group.hpp"
#include "hmcl/hochmitch/complex.hpp"

namespace hmcl {

// Unnormalized bar resolution P_p = kG^{(x)(p+1)} of the trivial module k.
// Basis element g_0[g_1|...|g_p] sits at the base-|G| number g_0 g_1 ... g_p
// (g_0 most significant), and
// d(g_0[g_1|...|g_p]) = g_0 g_1[g_2|...|g_p]
//   + sum_{i=1}^{p-1} (-1)^i g_0[...|g_i g_{i+1}|...] + (-1)^p g_0[g_1|...|g_{p-1}].
struct BarResolution {
    GroupPtr group;
    BasedComplex complex; // degrees 0..p_max
    std::vector<KGModule> modules;
    Matrix augmentation; // P_0 -> k, every group element to 1
    // k <- P_0 <- ... <- P_{p_max} is exact at k, P_0, ..., P_{p_max - 1}.
    bool exact = false;
};

BarResolution bar_resolution(GroupPtr g, const Field& f, std::size_t p_max);

// P_p (x)_{kG} X written on k[G^p] (x) X, degrees 0..p_max:
// d([g_1|...|g_p] (x) x) = [g_2|...|g_p] (x) g_1^-1 x
//   + sum_{i=1}^{p-1} (-1)^i [...|g_i g_{i+1}|...] (x) x + (-1)^p [g_1|...|g_{p-1}] (x) x.
BasedComplex group_chain_complex(const KGModule& x, std::size_t p_max);

// Hom_{kG}(P_p, X) written on maps G^p -> X, degrees 0..p_max:
// (df)(g_1, ..., g_{p+1}) = g_1 f(g_2, ..., g_{p+1})
//   + sum_{i=1}^{p} (-1)^i f(..., g_i g_{i+1}, ...) + (-1)^{p+1} f(g_1, ..., g_p).
BasedComplex group_cochain_complex(const KGModule& x, std::size_t p_max);

// dim H_p(G, X) and dim H^p(G, X) for p = 0..p_max.
std::vector<std::size_t> group_homology(const KGModule& x, std::size_t p_max);
std::vector<std::size_t> group_cohomology(const KGModule& x, std::size_t p_max);

} // namespace hmcl

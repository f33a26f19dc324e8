#pragma once

#include "hmcl/covering/equivariant.hpp"
#include "hmcl/spectral/double_complex.hpp"

#include <optional>

namespace hmcl {

// P_p (x)_{kG} C_q(C, L M) for the covering, p <= P, q <= Q.
DoubleComplex cartan_leray_double_complex(const QuotientData& q, const Bimodule& m, std::size_t P, std::size_t Q);

// H_p(G, H_q(C, L M)) from the induced action on homology, p <= P, q <= Q.
std::vector<std::vector<std::size_t>> group_homology_of_homology(const QuotientData& q, const Bimodule& m,
                                                                 std::size_t P, std::size_t Q);
// H^p(G, H^q(C, L M)) from the induced action on cohomology.
std::vector<std::vector<std::size_t>> group_cohomology_of_cohomology(const QuotientData& q, const Bimodule& m,
                                                                     std::size_t P, std::size_t Q);

// Cohomological pages by duality: E_r^{p,q} with coefficients M has the
// dimension of E^r_{p,q} with coefficients D M.
std::vector<SSPage> cohomological_pages(const QuotientData& q, const Bimodule& m, std::size_t P, std::size_t Q,
                                        std::size_t r_max);

struct DegreeComparison {
    std::size_t degree = 0;
    std::size_t base = 0;     // dim H(B, M)
    std::size_t cover = 0;    // dim H(C, L M)
    std::size_t reduced = 0;  // coinvariants or invariants of the latter
    bool ok() const { return base == reduced; }
};

struct MaschkeReport {
    std::vector<DegreeComparison> homology;   // H_n(B, M) vs H_n(C, L M)/G
    std::vector<DegreeComparison> cohomology; // H^n(B, M) vs H^n(C, L M)^G
    bool ok() const;
};

// Throws PreconditionError when char k divides |G|.
MaschkeReport maschke_compare(const QuotientData& q, const Bimodule& m, std::size_t n_max);

struct HomEmbeddingReport {
    std::size_t hom_dim = 0; // dim Hom(G, k+)
    std::size_t h1_dim = 0;  // dim H^1(B, B)
    std::size_t h0_dim = 0;  // dim H^0(C, L B)
    std::size_t radical_dim = 0; // H^0(C, L B) inside the nilpotent parts
    bool constant_is_cocycle = false;
    bool splitting = false;  // h0 = 1 + radical with the constant tuple outside
    bool ok() const { return hom_dim <= h1_dim && constant_is_cocycle && splitting; }
};

// Requires C connected and B hom-finite, basic and totally split
// (PreconditionError otherwise).
HomEmbeddingReport verify_hom_embedding(const QuotientData& q, const GroupPresentation& g);

struct RankBoundReport {
    std::size_t rank = 0;
    std::optional<std::size_t> h1_dim;
    bool ok() const { return !h1_dim || rank <= *h1_dim; }
};

RankBoundReport verify_rank_bound(const GroupPresentation& g, const QuotientData* covering = nullptr);

// Connected cover and quotient hom-finite, basic and totally split.
void require_section_four_hypotheses(const QuotientData& q);

} // namespace hmcl

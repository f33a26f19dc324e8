#include "hmcl/spectral/cartan_leray.hpp"

#include "hmcl/error.hpp"
#include "hmcl/lincat/hypotheses.hpp"
#include "hmcl/spectral/group_homology.hpp"

namespace hmcl {

namespace {

Bimodule lifted(const QuotientData& q, const Bimodule& m)
{
    if (!(m.base() == *q.quotient))
        throw PreconditionError("coefficients must live over the quotient category");
    return lift(q.projection, m);
}

} // namespace

DoubleComplex cartan_leray_double_complex(const QuotientData& q, const Bimodule& m, std::size_t P, std::size_t Q)
{
    return bar_double_complex(action_on_chains(q.action, lifted(q, m), Q), P);
}

std::vector<std::vector<std::size_t>> group_homology_of_homology(const QuotientData& q, const Bimodule& m,
                                                                 std::size_t P, std::size_t Q)
{
    auto h = homology_with_action(action_on_chains(q.action, lifted(q, m), Q + 1));
    std::vector<std::vector<std::size_t>> table(P + 1, std::vector<std::size_t>(Q + 1));
    for (std::size_t j = 0; j <= Q; ++j) {
        auto dims = group_homology(h.actions[j], P);
        for (std::size_t p = 0; p <= P; ++p)
            table[p][j] = dims[p];
    }
    return table;
}

std::vector<std::vector<std::size_t>> group_cohomology_of_cohomology(const QuotientData& q, const Bimodule& m,
                                                                     std::size_t P, std::size_t Q)
{
    auto h = homology_with_action(action_on_cochains(q.action, lifted(q, m), Q + 1));
    std::vector<std::vector<std::size_t>> table(P + 1, std::vector<std::size_t>(Q + 1));
    for (std::size_t j = 0; j <= Q; ++j) {
        auto dims = group_cohomology(h.actions[j], P);
        for (std::size_t p = 0; p <= P; ++p)
            table[p][j] = dims[p];
    }
    return table;
}

std::vector<SSPage> cohomological_pages(const QuotientData& q, const Bimodule& m, std::size_t P, std::size_t Q,
                                        std::size_t r_max)
{
    return spectral_pages(cartan_leray_double_complex(q, dual(m), P, Q), Filtration::Columns, r_max);
}

bool MaschkeReport::ok() const
{
    for (const auto& d : homology)
        if (!d.ok())
            return false;
    for (const auto& d : cohomology)
        if (!d.ok())
            return false;
    return true;
}

MaschkeReport maschke_compare(const QuotientData& q, const Bimodule& m, std::size_t n_max)
{
    const std::size_t order = q.action.group().order();
    const std::uint32_t ch = m.field().characteristic();
    if (ch != 0 && order % ch == 0)
        throw PreconditionError("maschke_compare: characteristic " + std::to_string(ch) + " divides |G| = " +
                                std::to_string(order));
    Bimodule lm = lifted(q, m);
    MaschkeReport out;

    auto base_h = hochschild_homology_dims(m, n_max);
    auto cover_h = homology_with_action(action_on_chains(q.action, lm, n_max + 1));
    for (std::size_t n = 0; n <= n_max; ++n) {
        const KGModule& a = cover_h.actions[n];
        out.homology.push_back({n, base_h[n], a.dim, a.dim - augmentation_image(a).dim()});
    }

    auto base_c = hochschild_cohomology_dims(m, n_max);
    auto cover_c = homology_with_action(action_on_cochains(q.action, lm, n_max + 1));
    for (std::size_t n = 0; n <= n_max; ++n) {
        const KGModule& a = cover_c.actions[n];
        out.cohomology.push_back({n, base_c[n], a.dim, fixed_points(a).dim()});
    }
    return out;
}

void require_section_four_hypotheses(const QuotientData& q)
{
    if (!is_connected(q.action.category()))
        throw PreconditionError("the covering category is not connected");
    HypothesisReport h = hypothesis_checks(*q.quotient);
    if (!h.hom_finite)
        throw PreconditionError("the quotient category is not hom-finite");
    if (!h.basic)
        throw PreconditionError("the quotient category is not basic");
    if (!h.totally_split)
        throw PreconditionError("the quotient category is not totally split");
}

HomEmbeddingReport verify_hom_embedding(const QuotientData& q, const GroupPresentation& g)
{
    require_section_four_hypotheses(q);
    const LinearCategory& b = *q.quotient;
    const Field& f = b.field();
    HomEmbeddingReport out;
    out.hom_dim = hom_to_field_dim(g, f);
    out.h1_dim = hochschild_cohomology_dims(standard(q.quotient), 1)[1];

    Bimodule lb = lift(q.projection, standard(q.quotient));
    HochschildComplex c = cochain_complex(lb, 1);
    DegreeHomology h0 = degree_homology(c.complex, 0);
    out.h0_dim = h0.dim;

    // C^0 = sum over objects x of L B(x, x) = B(x', x') for the orbit x'.
    const TensorBasis& basis = c.bases[0];
    const std::size_t dim = basis.size();
    Vector constant(dim);
    Matrix radical(f, 0, dim);
    for (std::size_t i = 0; i < basis.sequences().size(); ++i) {
        const std::size_t x = basis.sequences()[i].objects[0];
        const std::size_t u = q.orbit_of[x];
        const Vector& id = b.identity(u);
        for (std::size_t k = 0; k < id.size(); ++k)
            constant[basis.offset(i) + k] = id[k];
        auto nil = nilpotent_part(b, u);
        if (!nil)
            throw InvariantError("totally split object without a nilpotent part");
        Matrix rows(f, nil->dim(), dim);
        for (std::size_t r = 0; r < nil->dim(); ++r) {
            SparseRow shifted;
            for (const auto& e : nil->basis().row(r))
                shifted.push_back({static_cast<std::uint32_t>(basis.offset(i) + e.col), e.value});
            rows.set_row(r, std::move(shifted));
        }
        radical = Matrix::vstack(radical, rows);
    }
    Subspace rad(radical);
    out.constant_is_cocycle = h0.cycles.contains(constant);
    out.radical_dim = intersection(h0.cycles, rad).dim();
    out.splitting = out.constant_is_cocycle && !rad.contains(constant) && out.h0_dim == 1 + out.radical_dim;
    return out;
}

RankBoundReport verify_rank_bound(const GroupPresentation& g, const QuotientData* covering)
{
    RankBoundReport out;
    out.rank = group_rank(g);
    if (covering) {
        require_section_four_hypotheses(*covering);
        out.h1_dim = hochschild_cohomology_dims(standard(covering->quotient), 1)[1];
    }
    return out;
}

} // namespace hmcl

#include "hmcl/covering/equivariant.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

namespace {

using Image = std::vector<std::pair<NerveSequence, Scalar>>;

// F applied to every morphism of the sequence, multiplied out.
Image map_sequence(const LinearFunctor& F, const NerveSequence& s, const Field& f)
{
    NerveSequence base;
    for (auto x : s.objects)
        base.objects.push_back(static_cast<std::uint32_t>(F.object_map[x]));
    Image partial{{base, Scalar(1)}};
    for (std::size_t i = 0; i < s.morphisms.size(); ++i) {
        Vector v = F.hom_map(s.objects[i + 1], s.objects[i]).column_vector(s.morphisms[i]);
        Image next;
        for (const auto& [seq, c] : partial)
            for (std::size_t r = 0; r < v.size(); ++r)
                if (v[r] != 0) {
                    NerveSequence t = seq;
                    t.morphisms.push_back(static_cast<std::uint32_t>(r));
                    next.emplace_back(std::move(t), f.mul(c, v[r]));
                }
        partial = std::move(next);
    }
    return partial;
}

// Matrix of the functor on the tensor basis, coefficients kept in place.
// transposed: entry (tau, sigma) for sigma in the image of tau instead.
Matrix nerve_matrix(const LinearFunctor& F, const TensorBasis& from, const TensorBasis& to, const Field& f,
                    bool transposed)
{
    MatrixBuilder b(f, transposed ? from.size() : to.size(), transposed ? to.size() : from.size());
    for (std::size_t si = 0; si < from.sequences().size(); ++si)
        for (const auto& [t, c] : map_sequence(F, from.sequences()[si], f)) {
            std::size_t ti = to.sequence_index(t);
            if (to.coefficient_dim(ti) != from.coefficient_dim(si))
                throw InvariantError("coefficient spaces differ along the action");
            for (std::size_t k = 0; k < from.coefficient_dim(si); ++k) {
                if (transposed)
                    b.add(from.offset(si) + k, to.offset(ti) + k, c);
                else
                    b.add(to.offset(ti) + k, from.offset(si) + k, c);
            }
        }
    return std::move(b).build();
}

void require_fixed(const GroupAction& a, const Bimodule& lifted)
{
    if (!(lifted.base() == a.category()))
        throw PreconditionError("coefficients live over a different category");
    if (!is_twist_fixed(a, lifted))
        throw PreconditionError("coefficients are not fixed by the twist action of the group");
}

} // namespace

void EquivariantComplex::validate() const
{
    const BasedComplex& c = complex;
    if (actions.size() != c.dims.size())
        throw InvariantError("equivariant complex needs one module per degree");
    for (std::size_t n = 0; n < actions.size(); ++n) {
        if (actions[n].dim != c.dims[n])
            throw InvariantError("module dimension differs from the complex in degree " + std::to_string(n));
        actions[n].validate();
    }
    const std::size_t order = actions.empty() ? 0 : actions[0].group->order();
    for (std::size_t s = 0; s < order; ++s)
        for (std::size_t n = 0; n <= c.top(); ++n) {
            if (c.direction == Direction::Chain) {
                if (n == 0)
                    continue;
                const Matrix& d = c.differentials[n];
                if (d * actions[n].action[s] != actions[n - 1].action[s] * d)
                    throw InvariantError("action does not commute with d in degree " + std::to_string(n));
            } else if (n < c.top()) {
                const Matrix& d = c.differentials[n];
                if (d * actions[n].action[s] != actions[n + 1].action[s] * d)
                    throw InvariantError("action does not commute with d in degree " + std::to_string(n));
            }
        }
}

EquivariantComplex action_on_chains(const GroupAction& a, const Bimodule& lifted, std::size_t max_degree)
{
    require_fixed(a, lifted);
    HochschildComplex hc = chain_complex(lifted, max_degree);
    EquivariantComplex out{std::move(hc.complex), {}, std::move(hc.bases)};
    const Field& f = lifted.field();
    for (const auto& basis : out.bases) {
        KGModule m{a.group_ptr(), basis.size(), {}};
        for (std::size_t s = 0; s < a.group().order(); ++s)
            m.action.push_back(nerve_matrix(a.functor(s), basis, basis, f, false));
        out.actions.push_back(std::move(m));
    }
    out.validate();
    return out;
}

EquivariantComplex action_on_cochains(const GroupAction& a, const Bimodule& lifted, std::size_t max_degree)
{
    require_fixed(a, lifted);
    HochschildComplex hc = cochain_complex(lifted, max_degree);
    EquivariantComplex out{std::move(hc.complex), {}, std::move(hc.bases)};
    const Field& f = lifted.field();
    for (const auto& basis : out.bases) {
        KGModule m{a.group_ptr(), basis.size(), {}};
        for (std::size_t s = 0; s < a.group().order(); ++s)
            m.action.push_back(nerve_matrix(a.functor(a.group().inverse(s)), basis, basis, f, true));
        out.actions.push_back(std::move(m));
    }
    out.validate();
    return out;
}

bool is_free_on_basis(const KGModule& m)
{
    const FiniteGroup& g = *m.group;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (s == g.identity())
            continue;
        Matrix t = m.action[s].transpose();
        for (std::size_t j = 0; j < m.dim; ++j) {
            const SparseRow& col = t.row(j);
            if (col.size() != 1 || col[0].col == j)
                return false;
        }
    }
    return true;
}

ReducedComplex coinvariants_complex(const EquivariantComplex& e)
{
    const BasedComplex& c = e.complex;
    std::vector<QuotientMap> q;
    for (const auto& m : e.actions)
        q.emplace_back(augmentation_image(m));
    ReducedComplex out;
    out.complex.direction = c.direction;
    out.complex.field = c.field;
    for (std::size_t n = 0; n < q.size(); ++n) {
        out.complex.dims.push_back(q[n].dim());
        out.maps.push_back(q[n].matrix());
        if (!c.labels.empty()) {
            std::vector<std::string> l;
            for (auto i : q[n].complement())
                l.push_back(c.labels[n][i]);
            out.complex.labels.push_back(std::move(l));
        }
    }
    for (std::size_t n = 0; n < c.differentials.size(); ++n) {
        const Matrix& d = c.differentials[n];
        if (c.direction == Direction::Chain && n == 0) {
            out.complex.differentials.push_back(Matrix(c.field, 0, q[0].dim()));
            continue;
        }
        std::size_t target = c.direction == Direction::Chain ? n - 1 : n + 1;
        if (!q[target].kernel().contains(map_subspace(d, q[n].kernel())))
            throw InvariantError("differential does not preserve the augmentation submodule");
        out.complex.differentials.push_back(q[target].matrix() * d * q[n].section());
    }
    out.complex.validate();
    return out;
}

ReducedComplex invariants_complex(const EquivariantComplex& e)
{
    const BasedComplex& c = e.complex;
    std::vector<Subspace> fixed;
    for (const auto& m : e.actions)
        fixed.push_back(fixed_points(m));
    ReducedComplex out;
    out.complex.direction = c.direction;
    out.complex.field = c.field;
    for (const auto& v : fixed) {
        out.complex.dims.push_back(v.dim());
        out.maps.push_back(v.basis().transpose());
    }
    for (std::size_t n = 0; n < c.differentials.size(); ++n) {
        if (c.direction == Direction::Chain && n == 0) {
            out.complex.differentials.push_back(Matrix(c.field, 0, fixed[0].dim()));
            continue;
        }
        std::size_t target = c.direction == Direction::Chain ? n - 1 : n + 1;
        const Matrix& d = c.differentials[n];
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < fixed[n].dim(); ++i) {
            Vector img = d.apply(fixed[n].basis().row_vector(i));
            if (!fixed[target].contains(img))
                throw InvariantError("differential does not preserve the fixed points");
            cols.push_back(fixed[target].coordinates(img));
        }
        out.complex.differentials.push_back(Matrix::from_columns(c.field, cols, fixed[target].dim()));
    }
    out.complex.validate();
    return out;
}

EquivariantHomology homology_with_action(const EquivariantComplex& e)
{
    EquivariantHomology out{homology(e.complex), {}};
    for (const auto& h : out.homology.degrees) {
        const KGModule& m = e.actions.at(h.degree);
        KGModule induced{m.group, h.dim, {}};
        for (const auto& a : m.action) {
            std::vector<Vector> cols;
            for (std::size_t r = 0; r < h.dim; ++r)
                cols.push_back(h.class_of(a.apply(h.representatives.row_vector(r))));
            induced.action.push_back(Matrix::from_columns(e.complex.field, cols, h.dim));
        }
        induced.validate();
        out.actions.push_back(std::move(induced));
    }
    return out;
}

IsoCheck chain_coinvariants_iso_check(const QuotientData& q, const Bimodule& m, std::size_t max_degree)
{
    if (!(m.base() == *q.quotient))
        throw PreconditionError("coefficients must live over the quotient category");
    const GroupAction& a = q.action;
    const Field& f = m.field();
    Bimodule lifted = lift(q.projection, m);
    EquivariantComplex cover = action_on_chains(a, lifted, max_degree);
    HochschildComplex base = chain_complex(m, max_degree);
    ReducedComplex coinv = coinvariants_complex(cover);

    auto fail = [](std::size_t n, const std::string& what) {
        return IsoCheck{false, "degree " + std::to_string(n) + ": " + what};
    };

    std::vector<Matrix> phi;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        const TensorBasis& from = cover.bases[n];
        const TensorBasis& to = base.bases[n];
        if (coinv.complex.dims[n] != to.size())
            return fail(n, "coinvariants have dimension " + std::to_string(coinv.complex.dims[n]) + ", expected " +
                               std::to_string(to.size()));
        phi.push_back(nerve_matrix(q.projection, from, to, f, false));
        const Matrix& p = phi.back();
        for (const auto& s : cover.actions[n].action)
            if (!(p * (s - Matrix::identity(f, from.size()))).is_zero())
                return fail(n, "projection does not factor through the coinvariants");
        if (n > 0 && phi[n - 1] * cover.complex.differentials[n] != base.complex.differentials[n] * p)
            return fail(n, "projection does not commute with the differentials");

        // Lift along the section: start at the section object, translate each
        // morphism so that it starts where the previous one ended.
        MatrixBuilder psi(f, from.size(), to.size());
        for (std::size_t ri = 0; ri < to.sequences().size(); ++ri) {
            const NerveSequence& rho = to.sequences()[ri];
            NerveSequence start;
            start.objects.push_back(static_cast<std::uint32_t>(q.section[rho.objects[0]]));
            std::vector<std::pair<NerveSequence, Scalar>> partial{{start, Scalar(1)}};
            std::size_t cur = q.section[rho.objects[0]];
            for (std::size_t i = 0; i < rho.morphisms.size(); ++i) {
                const std::size_t u = rho.objects[i], v = rho.objects[i + 1];
                const auto [y, j] = q.component(v, u, rho.morphisms[i]);
                std::size_t s = *a.transporter(q.section[u], cur);
                Vector vec = a.hom_map(s, y, q.section[u]).column_vector(j);
                const std::size_t next_obj = a.act(s, y);
                std::vector<std::pair<NerveSequence, Scalar>> next;
                for (const auto& [seq, c] : partial)
                    for (std::size_t r = 0; r < vec.size(); ++r)
                        if (vec[r] != 0) {
                            NerveSequence t = seq;
                            t.objects.push_back(static_cast<std::uint32_t>(next_obj));
                            t.morphisms.push_back(static_cast<std::uint32_t>(r));
                            next.emplace_back(std::move(t), f.mul(c, vec[r]));
                        }
                partial = std::move(next);
                cur = next_obj;
            }
            for (const auto& [t, c] : partial) {
                std::size_t ti = from.sequence_index(t);
                for (std::size_t k = 0; k < to.coefficient_dim(ri); ++k)
                    psi.add(from.offset(ti) + k, to.offset(ri) + k, c);
            }
        }
        Matrix ps = std::move(psi).build();
        if (p * ps != Matrix::identity(f, to.size()))
            return fail(n, "lifting followed by projection is not the identity");
        Subspace aug = augmentation_image(cover.actions[n]);
        Matrix defect = (ps * p - Matrix::identity(f, from.size())).transpose();
        for (std::size_t r = 0; r < defect.rows(); ++r)
            if (!aug.contains(defect.row_vector(r)))
                return fail(n, "projection followed by lifting is not the identity on coinvariants");
        if (from.size() - rank(p) != aug.dim())
            return fail(n, "kernel of the projection is larger than the augmentation submodule");
    }
    return {};
}

} // namespace hmcl

#include "hmcl/covering/group.hpp"

#include "hmcl/error.hpp"
#include "hmcl/exactlin/subspace.hpp"

#include <set>

namespace hmcl {

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table)
    : names_(std::move(names)), table_(std::move(table))
{
    const std::size_t n = names_.size();
    if (n == 0)
        throw InputError("a group needs at least one element");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
        throw InputError("duplicate group element names");
    if (table_.size() != n)
        throw InputError("multiplication table has the wrong number of rows");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw InputError("multiplication table has a row of the wrong length");
        for (auto v : row)
            if (v >= n)
                throw InputError("multiplication table entry out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw InputError("multiplication table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InputError("multiplication is not associative on (" + names_[a] + ", " + names_[b] + ", " +
                                     names_[c] + ")");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_)
                inverse_[a] = b;
    for (std::size_t a = 0; a < n; ++a)
        if (inverse_[a] == n)
            throw InputError("element " + names_[a] + " has no inverse");
}

FiniteGroup FiniteGroup::trivial()
{
    return cyclic(1);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n, const std::string& generator)
{
    if (n == 0)
        throw InputError("cyclic group of order 0");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : i == 1 ? generator : generator + "^" + std::to_string(i));
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
    std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t i = 0; i < na * nb; ++i)
        for (std::size_t j = 0; j < na * nb; ++j)
            table[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
    return FiniteGroup(std::move(names), std::move(table));
}

std::size_t FiniteGroup::index(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    throw InputError("unknown group element '" + name + "'");
}

IntMatrix GroupPresentation::abelianization_matrix() const
{
    IntMatrix m(relators.size(), generators.size());
    for (std::size_t r = 0; r < relators.size(); ++r)
        for (const auto& [g, e] : relators[r]) {
            if (g >= generators.size())
                throw InputError("relator uses an unknown generator");
            m.at(r, g) += e;
        }
    return m;
}

GroupPresentation cyclic_presentation(std::size_t n, const std::string& generator)
{
    return {{generator}, {{{0, static_cast<long>(n)}}}};
}

GroupPresentation table_presentation(const FiniteGroup& g)
{
    GroupPresentation p;
    p.generators = g.names();
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            p.relators.push_back({{a, 1}, {b, 1}, {g.mul(a, b), -1}});
    return p;
}

std::size_t group_rank(const GroupPresentation& p)
{
    return smith_normal_form(p.abelianization_matrix()).free_rank;
}

std::size_t hom_to_field_dim(const GroupPresentation& p, const Field& f)
{
    SmithForm s = smith_normal_form(p.abelianization_matrix());
    std::size_t d = s.free_rank;
    if (f.characteristic() != 0)
        for (const auto& factor : s.invariant_factors)
            if (mpz_divisible_ui_p(factor.get_mpz_t(), f.characteristic()))
                ++d;
    return d;
}

void KGModule::validate() const
{
    const FiniteGroup& g = *group;
    if (action.size() != g.order())
        throw InvariantError("kG-module needs one matrix per group element");
    for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim)
            throw InvariantError("kG-module action matrix has wrong shape");
    if (action[g.identity()] != Matrix::identity(action[0].field(), dim))
        throw InvariantError("identity element does not act trivially");
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b)
            if (action[a] * action[b] != action[g.mul(a, b)])
                throw InvariantError("action is not compatible with " + g.name(a) + " * " + g.name(b));
}

KGModule KGModule::trivial(GroupPtr g, const Field& f, std::size_t dim)
{
    KGModule m{g, dim, {}};
    for (std::size_t s = 0; s < g->order(); ++s)
        m.action.push_back(Matrix::identity(f, dim));
    return m;
}

KGModule KGModule::regular(GroupPtr g, const Field& f)
{
    const std::size_t n = g->order();
    KGModule m{g, n, {}};
    for (std::size_t s = 0; s < n; ++s) {
        Matrix a(f, n, n);
        for (std::size_t u = 0; u < n; ++u)
            a.set(g->mul(s, u), u, 1);
        m.action.push_back(std::move(a));
    }
    return m;
}

Subspace augmentation_image(const KGModule& m)
{
    const Field& f = m.action.at(0).field();
    Matrix gens(f, 0, m.dim);
    for (const auto& a : m.action)
        gens = Matrix::vstack(gens, (a - Matrix::identity(f, m.dim)).transpose());
    return Subspace(gens);
}

Subspace fixed_points(const KGModule& m)
{
    const Field& f = m.action.at(0).field();
    Matrix eqs(f, 0, m.dim);
    for (const auto& a : m.action)
        eqs = Matrix::vstack(eqs, a - Matrix::identity(f, m.dim));
    return kernel_basis(eqs);
}

} // namespace hmcl

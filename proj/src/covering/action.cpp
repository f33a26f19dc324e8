#include "hmcl/covering/action.hpp"

#include "hmcl/error.hpp"

#include <deque>
#include <set>

namespace hmcl {

namespace {

bool same_functor(const LinearFunctor& a, const LinearFunctor& b)
{
    return a.object_map == b.object_map && a.hom_maps == b.hom_maps;
}

} // namespace

LinearFunctor compose_functors(const LinearFunctor& f, const LinearFunctor& g)
{
    if (!(*g.target == *f.source))
        throw PreconditionError("compose_functors: functors are not composable");
    const std::size_t n = g.source->object_count();
    LinearFunctor out{g.source, f.target, std::vector<std::size_t>(n), {}};
    for (std::size_t x = 0; x < n; ++x)
        out.object_map[x] = f.object_map[g.object_map[x]];
    out.hom_maps.reserve(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            out.hom_maps.push_back(f.hom_map(g.object_map[y], g.object_map[x]) * g.hom_map(y, x));
    return out;
}

GroupAction::GroupAction(GroupPtr group, CategoryPtr category, const std::map<std::size_t, LinearFunctor>& generators)
    : group_(std::move(group)), category_(std::move(category))
{
    const FiniteGroup& g = *group_;
    for (const auto& [s, f] : generators) {
        if (s >= g.order())
            throw InputError("generator index out of range");
        if (!(*f.source == *category_) || !(*f.target == *category_))
            throw InputError("generator " + g.name(s) + " is not an endofunctor of the category");
        try {
            f.validate();
        } catch (const InvariantError& e) {
            throw InputError("generator " + g.name(s) + " is not a functor: " + e.what());
        }
    }
    std::vector<std::optional<LinearFunctor>> known(g.order());
    known[g.identity()] = identity_functor(category_);
    std::deque<std::size_t> queue{g.identity()};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& [s, f] : generators) {
            std::size_t v = g.mul(s, u);
            LinearFunctor h = compose_functors(f, *known[u]);
            if (known[v]) {
                if (!same_functor(*known[v], h))
                    throw InputError("generator images do not respect the group law at " + g.name(s) + " * " +
                                     g.name(u));
            } else {
                known[v] = std::move(h);
                queue.push_back(v);
            }
        }
    }
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (!known[s])
            throw InputError("generator images do not determine the action of " + g.name(s));
        functors_.push_back(std::move(*known[s]));
    }
}

GroupAction GroupAction::trivial(GroupPtr group, CategoryPtr category)
{
    std::map<std::size_t, LinearFunctor> gens;
    for (std::size_t s = 0; s < group->order(); ++s)
        gens.emplace(s, identity_functor(category));
    return GroupAction(std::move(group), std::move(category), gens);
}

std::optional<std::size_t> GroupAction::transporter(std::size_t x, std::size_t y) const
{
    for (std::size_t s = 0; s < functors_.size(); ++s)
        if (act(s, x) == y)
            return s;
    return std::nullopt;
}

GroupAction action_from_presentation(GroupPtr group, const PresentedCategory& c,
                                     const std::vector<GeneratorImage>& generators)
{
    const QuiverPresentation& q = c.presentation();
    const LinearCategory& cat = *c.category();
    const Field& f = cat.field();
    const std::size_t n = cat.object_count();

    std::map<std::size_t, LinearFunctor> functors;
    for (const auto& gen : generators) {
        std::size_t s = group->index(gen.element);
        if (functors.count(s))
            throw InputError("element " + gen.element + " is given twice");

        std::vector<std::size_t> obj(n);
        for (std::size_t x = 0; x < n; ++x)
            obj[x] = x;
        std::set<std::size_t> seen;
        for (const auto& [from, to] : gen.objects) {
            std::size_t x = cat.object_index(from);
            if (!seen.insert(x).second)
                throw InputError("object " + from + " is mapped twice by " + gen.element);
            obj[x] = cat.object_index(to);
        }
        if (std::set<std::size_t>(obj.begin(), obj.end()).size() != n)
            throw InputError("element " + gen.element + " does not permute the objects");

        std::vector<std::size_t> arrow_img(q.arrows.size());
        std::vector<Scalar> arrow_coef(q.arrows.size(), Scalar(1));
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            arrow_img[a] = a;
        std::set<std::size_t> seen_arrows;
        for (const auto& img : gen.arrows) {
            std::size_t a = c.arrow_index(img.arrow);
            if (!seen_arrows.insert(a).second)
                throw InputError("arrow " + img.arrow + " is mapped twice by " + gen.element);
            arrow_img[a] = c.arrow_index(img.image);
            Scalar coef;
            try {
                coef = f.reduce(img.coefficient);
            } catch (const PreconditionError&) {
                throw InputError("coefficient of " + img.arrow + " is not defined over " + f.name());
            }
            if (coef == 0)
                throw InputError("arrow " + img.arrow + " is sent to zero by " + gen.element);
            arrow_coef[a] = coef;
        }
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            const Arrow& src = q.arrows[a];
            const Arrow& dst = q.arrows[arrow_img[a]];
            if (cat.object_index(dst.source) != obj[cat.object_index(src.source)] ||
                cat.object_index(dst.target) != obj[cat.object_index(src.target)])
                throw InputError("image of arrow " + src.name + " under " + gen.element +
                                 " does not match the object map");
        }

        // Relations must map into the ideal.
        for (const auto& rel : q.relations) {
            Vector total;
            for (const auto& term : rel.terms) {
                std::vector<std::string> names;
                Scalar coef = f.reduce(term.coefficient);
                for (const auto& an : term.arrows) {
                    std::size_t a = c.arrow_index(an);
                    names.push_back(q.arrows[arrow_img[a]].name);
                    coef = f.mul(coef, arrow_coef[a]);
                }
                std::string vertex =
                    term.vertex.empty() ? std::string() : cat.object_name(obj[cat.object_index(term.vertex)]);
                Vector v = c.reduce_path(names, vertex);
                if (total.empty())
                    total.assign(v.size(), Scalar(0));
                for (std::size_t i = 0; i < v.size(); ++i)
                    total[i] = f.add(total[i], f.mul(coef, v[i]));
            }
            if (!is_zero(total))
                throw InputError("element " + gen.element + " does not preserve the relation " + to_string(rel));
        }

        LinearFunctor fun{c.category(), c.category(), obj, {}};
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                Matrix m(f, cat.hom_dim(obj[y], obj[x]), cat.hom_dim(y, x));
                for (std::size_t i = 0; i < cat.hom_dim(y, x); ++i) {
                    const auto& path = c.basis_path(y, x, i);
                    std::vector<std::size_t> img;
                    Scalar coef(1);
                    for (auto a : path) {
                        img.push_back(arrow_img[a]);
                        coef = f.mul(coef, arrow_coef[a]);
                    }
                    Vector v = c.reduce_path(obj[x], obj[y], img);
                    for (std::size_t r = 0; r < v.size(); ++r)
                        if (v[r] != 0)
                            m.set(r, i, f.mul(coef, v[r]));
                }
                fun.hom_maps.push_back(std::move(m));
            }
        functors.emplace(s, std::move(fun));
    }
    return GroupAction(std::move(group), c.category(), functors);
}

bool check_free_action(const GroupAction& a)
{
    const FiniteGroup& g = a.group();
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (s == g.identity())
            continue;
        for (std::size_t x = 0; x < a.category().object_count(); ++x)
            if (a.act(s, x) == x)
                return false;
    }
    return true;
}

Bimodule twist_by(const GroupAction& a, std::size_t s, const Bimodule& m)
{
    return twist(m, a.functor(a.group().inverse(s)));
}

bool is_twist_fixed(const GroupAction& a, const Bimodule& m)
{
    if (!(m.base() == a.category()))
        throw PreconditionError("is_twist_fixed: bimodule lives over a different category");
    for (std::size_t s = 0; s < a.group().order(); ++s)
        if (!(twist_by(a, s, m) == m))
            return false;
    return true;
}

QuotientData quotient_category(const GroupAction& a, const std::optional<std::vector<std::size_t>>& section)
{
    if (!check_free_action(a))
        throw PreconditionError("quotient_category: the action is not free");
    const LinearCategory& c = a.category();
    const FiniteGroup& g = a.group();
    const Field& f = c.field();
    const std::size_t n = c.object_count();

    QuotientData out{a, nullptr, {}, std::vector<std::size_t>(n, n), {}, {}, {}};
    for (std::size_t x = 0; x < n; ++x) {
        if (out.orbit_of[x] != n)
            continue;
        std::set<std::size_t> members;
        for (std::size_t s = 0; s < g.order(); ++s)
            members.insert(a.act(s, x));
        for (auto y : members)
            out.orbit_of[y] = out.orbits.size();
        out.orbits.emplace_back(members.begin(), members.end());
    }
    const std::size_t m = out.orbits.size();
    if (section) {
        if (section->size() != m)
            throw InputError("section must pick one object per orbit");
        for (std::size_t u = 0; u < m; ++u)
            if ((*section)[u] >= n || out.orbit_of[(*section)[u]] != u)
                throw InputError("section object is not in its orbit");
        out.section = *section;
    } else {
        for (const auto& o : out.orbits)
            out.section.push_back(o.front());
    }

    // Offsets of the components y in v inside hom(v, u).
    out.components.resize(m * m);
    std::vector<std::map<std::size_t, std::size_t>> offset(m * m);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t u = 0; u < m; ++u)
            for (auto y : out.orbits[v]) {
                offset[v * m + u][y] = out.components[v * m + u].size();
                for (std::size_t j = 0; j < c.hom_dim(y, out.section[u]); ++j)
                    out.components[v * m + u].emplace_back(y, j);
            }
    auto transporter = [&](std::size_t x, std::size_t y) {
        auto s = a.transporter(x, y);
        if (!s)
            throw InvariantError("quotient_category: objects in one orbit are not related");
        return *s;
    };

    CategoryData d;
    d.field = f;
    for (std::size_t u = 0; u < m; ++u)
        d.objects.push_back(c.object_name(out.section[u]));
    d.hom_labels.resize(m * m);
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t u = 0; u < m; ++u)
            for (const auto& [y, j] : out.components[v * m + u])
                d.hom_labels[v * m + u].push_back(c.hom_labels(y, out.section[u])[j]);
    d.products.resize(m * m * m);
    for (std::size_t w = 0; w < m; ++w)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t u = 0; u < m; ++u) {
                auto& table = d.products[(w * m + v) * m + u];
                const std::size_t x0u = out.section[u], x0v = out.section[v];
                const std::size_t dim_wu = out.components[w * m + u].size();
                for (const auto& [z, i] : out.components[w * m + v])
                    for (const auto& [y, j] : out.components[v * m + u]) {
                        // Translate the outer factor so that it starts at y.
                        std::size_t s = transporter(x0v, y);
                        const std::size_t sz = a.act(s, z);
                        Vector fi = a.hom_map(s, z, x0v).column_vector(i);
                        Vector gj(c.hom_dim(y, x0u));
                        gj[j] = 1;
                        Vector prod = c.compose(sz, y, x0u, fi, gj);
                        Vector coords(dim_wu);
                        std::size_t off = offset[w * m + u].at(sz);
                        for (std::size_t r = 0; r < prod.size(); ++r)
                            coords[off + r] = prod[r];
                        table.push_back(std::move(coords));
                    }
            }
    for (std::size_t u = 0; u < m; ++u) {
        Vector id(out.components[u * m + u].size());
        const Vector& e = c.identity(out.section[u]);
        std::size_t off = offset[u * m + u].at(out.section[u]);
        for (std::size_t r = 0; r < e.size(); ++r)
            id[off + r] = e[r];
        d.identities.push_back(std::move(id));
    }
    try {
        out.quotient = share(LinearCategory(std::move(d)));
    } catch (const InvariantError& e) {
        throw InvariantError(std::string("quotient composition is not well defined: ") + e.what());
    }

    out.projection = LinearFunctor{a.category_ptr(), out.quotient, out.orbit_of, {}};
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t u = out.orbit_of[x], v = out.orbit_of[y];
            std::size_t s = transporter(x, out.section[u]);
            const std::size_t sy = a.act(s, y);
            const Matrix& hs = a.hom_map(s, y, x);
            std::size_t off = offset[v * m + u].at(sy);
            Matrix p(f, out.components[v * m + u].size(), c.hom_dim(y, x));
            for (std::size_t r = 0; r < hs.rows(); ++r)
                for (const auto& e : hs.row(r))
                    p.set(off + r, e.col, e.value);
            out.projection.hom_maps.push_back(std::move(p));
        }
    out.projection.validate();
    return out;
}

} // namespace hmcl

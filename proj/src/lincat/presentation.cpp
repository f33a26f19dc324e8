#include "hmcl/lincat/presentation.hpp"

#include "hmcl/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hmcl {

std::string to_string(const Relation& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        const PathTerm& t = r.terms[i];
        std::string coeff = to_string(t.coefficient);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (i > 0)
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        if (negative)
            coeff = coeff.substr(1);
        if (coeff != "1")
            out += coeff + " ";
        if (t.arrows.empty()) {
            out += "1_" + t.vertex;
        } else {
            for (std::size_t k = 0; k < t.arrows.size(); ++k)
                out += (k ? "*" : "") + t.arrows[k];
        }
    }
    return out;
}

void QuiverPresentation::validate() const
{
    std::set<std::string> names;
    for (const auto& v : vertices) {
        if (v.empty())
            throw InputError("empty vertex name");
        if (!names.insert(v).second)
            throw InputError("duplicate vertex '" + v + "'");
    }
    std::map<std::string, const Arrow*> by_name;
    for (const auto& a : arrows) {
        if (a.name.empty())
            throw InputError("empty arrow name");
        if (!names.count(a.source) || !names.count(a.target))
            throw InputError("arrow '" + a.name + "' has an undeclared endpoint");
        if (!by_name.emplace(a.name, &a).second)
            throw InputError("duplicate arrow '" + a.name + "'");
    }
    if (nilpotence_bound && *nilpotence_bound == 0)
        throw InputError("nilpotence bound must be positive");

    for (const auto& r : relations) {
        if (r.terms.empty())
            throw InputError("empty relation");
        std::optional<std::pair<std::string, std::string>> ends;
        for (const auto& t : r.terms) {
            std::string src, tgt;
            if (t.arrows.empty()) {
                if (!names.count(t.vertex))
                    throw InputError("identity path on unknown vertex '" + t.vertex + "' in relation " + to_string(r));
                src = tgt = t.vertex;
            } else {
                for (const auto& name : t.arrows)
                    if (!by_name.count(name))
                        throw InputError("unknown arrow '" + name + "' in relation " + to_string(r));
                for (std::size_t k = 0; k + 1 < t.arrows.size(); ++k)
                    if (by_name[t.arrows[k]]->source != by_name[t.arrows[k + 1]]->target)
                        throw InputError("non-composable path in relation " + to_string(r));
                src = by_name[t.arrows.back()]->source;
                tgt = by_name[t.arrows.front()]->target;
            }
            if (ends && *ends != std::pair{src, tgt})
                throw InputError("relation " + to_string(r) + " mixes non-parallel paths");
            ends = std::pair{src, tgt};
        }
    }

    if (!nilpotence_bound) {
        // Depth-first search for an oriented cycle.
        std::map<std::string, int> state;
        std::function<bool(const std::string&)> cyclic = [&](const std::string& v) {
            state[v] = 1;
            for (const auto& a : arrows) {
                if (a.source != v)
                    continue;
                if (state[a.target] == 1 || (state[a.target] == 0 && cyclic(a.target)))
                    return true;
            }
            state[v] = 2;
            return false;
        };
        for (const auto& v : vertices)
            if (state[v] == 0 && cyclic(v))
                throw InputError("quiver has an oriented cycle but no nilpotence bound");
    }
}

std::string path_label(const QuiverPresentation& q, const std::vector<std::size_t>& arrows, std::size_t vertex)
{
    if (arrows.empty())
        return "1_" + q.vertices[vertex];
    std::string out;
    for (std::size_t k = 0; k < arrows.size(); ++k)
        out += (k ? "*" : "") + q.arrows[arrows[k]].name;
    return out;
}

PresentedCategory::PresentedCategory(const QuiverPresentation& q, Field field)
    : presentation_(q), field_(field)
{
    presentation_.validate();
    const std::size_t n = vertex_count();
    const auto& arrows = presentation_.arrows;
    std::vector<std::size_t> src(arrows.size()), tgt(arrows.size());
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        src[a] = vertex_index(arrows[a].source);
        tgt[a] = vertex_index(arrows[a].target);
    }
    auto short_enough = [&](std::size_t len) { return !q.nilpotence_bound || len < *q.nilpotence_bound; };

    // Enumerate nonzero paths from each vertex.
    paths_.assign(n * n, {});
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> stack{{{}, x}};
        while (!stack.empty()) {
            auto [p, end] = stack.back();
            stack.pop_back();
            paths_[end * n + x].push_back(p);
            if (!short_enough(p.size() + 1))
                continue;
            for (std::size_t a = 0; a < arrows.size(); ++a)
                if (src[a] == end) {
                    std::vector<std::size_t> longer{a};
                    longer.insert(longer.end(), p.begin(), p.end());
                    stack.push_back({std::move(longer), tgt[a]});
                }
        }
    }
    auto path_less = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t k = 0; k < a.size(); ++k)
            if (arrows[a[k]].name != arrows[b[k]].name)
                return arrows[a[k]].name < arrows[b[k]].name;
        return false;
    };
    path_index_.assign(n * n, {});
    for (std::size_t i = 0; i < n * n; ++i) {
        std::sort(paths_[i].begin(), paths_[i].end(), path_less);
        for (std::size_t k = 0; k < paths_[i].size(); ++k)
            path_index_[i][paths_[i][k]] = k;
    }

    // Vectors in the path space of (y, x) are indexed by column, where
    // column = count - 1 - path position.
    auto column = [&](std::size_t y, std::size_t x, std::size_t pos) { return paths_[y * n + x].size() - 1 - pos; };
    auto unit_path = [&](std::size_t y, std::size_t x, const std::vector<std::size_t>& p) {
        Vector v(paths_[y * n + x].size());
        if (auto pos = path_position(y, x, p))
            v[column(y, x, *pos)] = 1;
        return v;
    };

    ideal_.clear();
    for (std::size_t i = 0; i < n * n; ++i)
        ideal_.push_back(Subspace::zero(field_, paths_[i].size()));

    struct Pending {
        std::size_t y, x;
        Vector v;
    };
    std::deque<Pending> work;
    auto offer = [&](std::size_t y, std::size_t x, const Vector& v) {
        Subspace& s = ideal_[y * n + x];
        if (is_zero(v) || s.contains(v))
            return;
        s = Subspace(Matrix::vstack(s.basis(), Matrix::from_rows(field_, {v}, v.size())));
        work.push_back({y, x, v});
    };
    for (const auto& r : presentation_.relations) {
        std::size_t y = 0, x = 0;
        {
            const PathTerm& t = r.terms.front();
            if (t.arrows.empty()) {
                y = x = vertex_index(t.vertex);
            } else {
                y = tgt[arrow_index(t.arrows.front())];
                x = src[arrow_index(t.arrows.back())];
            }
        }
        Vector v(paths_[y * n + x].size());
        for (const auto& t : r.terms) {
            std::vector<std::size_t> p;
            for (const auto& name : t.arrows)
                p.push_back(arrow_index(name));
            if (auto pos = path_position(y, x, p)) {
                Scalar& slot = v[column(y, x, *pos)];
                slot = field_.add(slot, field_.reduce(t.coefficient));
            }
        }
        offer(y, x, v);
    }
    // Saturate: close under left and right multiplication by arrows.
    while (!work.empty()) {
        Pending item = std::move(work.front());
        work.pop_front();
        const auto& ps = paths_[item.y * n + item.x];
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (src[a] == item.y) {
                std::size_t z = tgt[a];
                Vector w(paths_[z * n + item.x].size());
                for (std::size_t pos = 0; pos < ps.size(); ++pos) {
                    const Scalar& c = item.v[column(item.y, item.x, pos)];
                    if (sgn(c) == 0)
                        continue;
                    std::vector<std::size_t> p{a};
                    p.insert(p.end(), ps[pos].begin(), ps[pos].end());
                    if (auto np = path_position(z, item.x, p))
                        w[column(z, item.x, *np)] = field_.add(w[column(z, item.x, *np)], c);
                }
                offer(z, item.x, w);
            }
            if (tgt[a] == item.x) {
                std::size_t w0 = src[a];
                Vector w(paths_[item.y * n + w0].size());
                for (std::size_t pos = 0; pos < ps.size(); ++pos) {
                    const Scalar& c = item.v[column(item.y, item.x, pos)];
                    if (sgn(c) == 0)
                        continue;
                    std::vector<std::size_t> p = ps[pos];
                    p.push_back(a);
                    if (auto np = path_position(item.y, w0, p))
                        w[column(item.y, w0, *np)] = field_.add(w[column(item.y, w0, *np)], c);
                }
                offer(item.y, w0, w);
            }
        }
    }

    // Hom bases: paths whose columns are not pivots of the ideal.
    basis_paths_.assign(n * n, {});
    for (std::size_t i = 0; i < n * n; ++i) {
        std::vector<bool> pivot(paths_[i].size(), false);
        for (auto c : ideal_[i].pivots())
            pivot[c] = true;
        for (std::size_t pos = 0; pos < paths_[i].size(); ++pos)
            if (!pivot[paths_[i].size() - 1 - pos])
                basis_paths_[i].push_back(pos);
    }

    CategoryData d;
    d.field = field_;
    d.objects = presentation_.vertices;
    d.hom_labels.resize(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            for (auto pos : basis_paths_[y * n + x])
                d.hom_labels[y * n + x].push_back(path_label(presentation_, paths_[y * n + x][pos], x));
    d.products.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                auto& table = d.products[(z * n + y) * n + x];
                for (auto pi : basis_paths_[z * n + y])
                    for (auto qj : basis_paths_[y * n + x]) {
                        std::vector<std::size_t> p = paths_[z * n + y][pi];
                        const auto& tail = paths_[y * n + x][qj];
                        p.insert(p.end(), tail.begin(), tail.end());
                        table.push_back(reduce_in_path_space(z, x, unit_path(z, x, p)));
                    }
            }
    for (std::size_t x = 0; x < n; ++x)
        d.identities.push_back(reduce_in_path_space(x, x, unit_path(x, x, {})));
    category_ = share(LinearCategory(std::move(d)));
}

std::size_t PresentedCategory::vertex_index(const std::string& name) const
{
    for (std::size_t i = 0; i < presentation_.vertices.size(); ++i)
        if (presentation_.vertices[i] == name)
            return i;
    throw InputError("unknown vertex '" + name + "'");
}

std::size_t PresentedCategory::arrow_index(const std::string& name) const
{
    for (std::size_t i = 0; i < presentation_.arrows.size(); ++i)
        if (presentation_.arrows[i].name == name)
            return i;
    throw InputError("unknown arrow '" + name + "'");
}

std::optional<std::size_t> PresentedCategory::path_position(std::size_t y, std::size_t x,
                                                            const std::vector<std::size_t>& p) const
{
    const auto& index = path_index_[y * vertex_count() + x];
    auto it = index.find(p);
    if (it == index.end())
        return std::nullopt; // longer than the nilpotence bound
    return it->second;
}

Vector PresentedCategory::reduce_in_path_space(std::size_t y, std::size_t x, const Vector& v) const
{
    const std::size_t i = y * vertex_count() + x;
    Vector r = ideal_[i].reduce(v);
    Vector out;
    out.reserve(basis_paths_[i].size());
    for (auto pos : basis_paths_[i])
        out.push_back(r[paths_[i].size() - 1 - pos]);
    return out;
}

Vector PresentedCategory::reduce_path(std::size_t source, std::size_t target, const std::vector<std::size_t>& arrows) const
{
    const std::size_t n = vertex_count();
    if (source >= n || target >= n)
        throw PreconditionError("reduce_path: vertex out of range");
    std::size_t at = source;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
        const Arrow& a = presentation_.arrows.at(*it);
        if (vertex_index(a.source) != at)
            throw PreconditionError("reduce_path: arrows are not composable");
        at = vertex_index(a.target);
    }
    if (at != target)
        throw PreconditionError("reduce_path: path does not end at the target");
    Vector v(paths_[target * n + source].size());
    if (auto pos = path_position(target, source, arrows))
        v[v.size() - 1 - *pos] = 1;
    return reduce_in_path_space(target, source, v);
}

Vector PresentedCategory::reduce_path(const std::vector<std::string>& arrow_names, const std::string& vertex) const
{
    if (arrow_names.empty()) {
        std::size_t v = vertex_index(vertex);
        return reduce_path(v, v, {});
    }
    std::vector<std::size_t> p;
    for (const auto& name : arrow_names)
        p.push_back(arrow_index(name));
    std::size_t src = vertex_index(presentation_.arrows[p.back()].source);
    std::size_t tgt = vertex_index(presentation_.arrows[p.front()].target);
    return reduce_path(src, tgt, p);
}

LinearCategory from_presentation(const QuiverPresentation& q, Field field)
{
    return *PresentedCategory(q, field).category();
}

} // namespace hmcl

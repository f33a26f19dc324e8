#pragma once

// Group actions used by the covering and spectral suites, including random
// covers of random quivers built from arrow labels in a group.

#include "hmcl/covering/action.hpp"
#include "random_quiver.hpp"
#include "fixtures.hpp"

namespace fixtures {

inline hmcl::GeneratorImage crown_swap_image(long scale = 1)
{
    hmcl::GeneratorImage g;
    g.element = "t";
    g.objects = {{"x", "tx"}, {"tx", "x"}, {"y", "ty"}, {"ty", "y"}};
    g.arrows = {{"a", mpq_class(scale), "ta"}, {"ta", mpq_class(1, scale), "a"}, {"b", 1, "tb"}, {"tb", 1, "b"}};
    return g;
}

struct Cover {
    hmcl::QuiverPresentation base;
    hmcl::QuiverPresentation total;
    hmcl::GroupPtr group;
    std::vector<hmcl::GeneratorImage> generators; // one per group element
};

// Vertices (v, g) ordered with v major; arrow alpha labelled w(alpha) lifts
// to (alpha, g): (s, g) -> (t, g w). The group acts by left multiplication.
inline Cover voltage_cover(const hmcl::QuiverPresentation& base, hmcl::GroupPtr group, std::mt19937& rng)
{
    const hmcl::FiniteGroup& G = *group;
    Cover c{base, {}, group, {}};
    auto vname = [&](const std::string& v, std::size_t g) { return v + "." + G.name(g); };
    auto aname = [&](const std::string& a, std::size_t g) { return a + "." + G.name(g); };
    for (const auto& v : base.vertices)
        for (std::size_t g = 0; g < G.order(); ++g)
            c.total.vertices.push_back(vname(v, g));
    std::map<std::string, std::size_t> voltage;
    std::map<std::string, const hmcl::Arrow*> arrow;
    for (const auto& a : base.arrows) {
        voltage[a.name] = rng() % G.order();
        arrow[a.name] = &a;
        for (std::size_t g = 0; g < G.order(); ++g)
            c.total.arrows.push_back({aname(a.name, g), vname(a.source, g), vname(a.target, G.mul(g, voltage[a.name]))});
    }
    for (const auto& rel : base.relations)
        for (std::size_t g = 0; g < G.order(); ++g) {
            hmcl::Relation lifted;
            for (const auto& term : rel.terms) {
                hmcl::PathTerm t{term.coefficient, {}, term.vertex.empty() ? "" : vname(term.vertex, g)};
                std::size_t at = g;
                std::vector<std::string> names;
                for (auto it = term.arrows.rbegin(); it != term.arrows.rend(); ++it) {
                    names.push_back(aname(*it, at));
                    at = G.mul(at, voltage[*it]);
                }
                t.arrows.assign(names.rbegin(), names.rend());
                lifted.terms.push_back(std::move(t));
            }
            c.total.relations.push_back(std::move(lifted));
        }
    c.total.nilpotence_bound = base.nilpotence_bound;
    for (std::size_t s = 0; s < G.order(); ++s) {
        hmcl::GeneratorImage img;
        img.element = G.name(s);
        for (const auto& v : base.vertices)
            for (std::size_t g = 0; g < G.order(); ++g)
                img.objects.emplace_back(vname(v, g), vname(v, G.mul(s, g)));
        for (const auto& a : base.arrows)
            for (std::size_t g = 0; g < G.order(); ++g)
                img.arrows.push_back({aname(a.name, g), 1, aname(a.name, G.mul(s, g))});
        c.generators.push_back(std::move(img));
    }
    return c;
}

} // namespace fixtures

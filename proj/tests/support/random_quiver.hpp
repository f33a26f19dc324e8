#pragma once

// Random acyclic quivers with monomial length-2 relations, plus an
// independent path counter for their hom dimensions.

#include "hmcl/lincat/presentation.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>

namespace fixtures {

struct RandomQuiver {
    hmcl::QuiverPresentation q;
    std::set<std::pair<std::size_t, std::size_t>> forbidden; // (second, first) arrow pairs
};

inline RandomQuiver random_quiver(std::mt19937& rng)
{
    RandomQuiver r;
    std::size_t n = 2 + rng() % 3;
    for (std::size_t v = 0; v < n; ++v)
        r.q.vertices.push_back("v" + std::to_string(v));
    std::size_t arrows = rng() % 6;
    for (std::size_t a = 0; a < arrows; ++a) {
        std::size_t s = rng() % n, t = rng() % n;
        if (s == t)
            continue;
        if (s > t)
            std::swap(s, t);
        r.q.arrows.push_back({"a" + std::to_string(r.q.arrows.size()), r.q.vertices[s], r.q.vertices[t]});
    }
    for (std::size_t i = 0; i < r.q.arrows.size(); ++i)
        for (std::size_t j = 0; j < r.q.arrows.size(); ++j)
            if (r.q.arrows[j].source == r.q.arrows[i].target && rng() % 2) {
                r.forbidden.insert({j, i});
                r.q.relations.push_back({{{1, {r.q.arrows[j].name, r.q.arrows[i].name}, ""}}});
            }
    return r;
}

// Counts arrow sequences x -> y avoiding forbidden consecutive pairs.
inline std::size_t count_paths(const RandomQuiver& r, const std::string& y, const std::string& x)
{
    std::size_t total = 0;
    std::vector<std::pair<std::string, std::optional<std::size_t>>> stack{{x, std::nullopt}};
    while (!stack.empty()) {
        auto [at, last] = stack.back();
        stack.pop_back();
        if (at == y)
            ++total;
        for (std::size_t a = 0; a < r.q.arrows.size(); ++a)
            if (r.q.arrows[a].source == at && !(last && r.forbidden.count({a, *last})))
                stack.push_back({r.q.arrows[a].target, a});
    }
    return total;
}

} // namespace fixtures

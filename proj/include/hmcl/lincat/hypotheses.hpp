#pragma once

#include "hmcl/exactlin/subspace.hpp"
#include "hmcl/lincat/category.hpp"

#include <optional>
#include <vector>

namespace hmcl {

// When hom(x, x) = k 1 + N with N a nilpotent ideal, returns the algebra
// map chi: hom(x, x) -> k (values on the basis) whose kernel is N.
std::optional<Vector> local_character(const LinearCategory& c, std::size_t x);

// ker chi inside hom(x, x) when x is totally split.
std::optional<Subspace> nilpotent_part(const LinearCategory& c, std::size_t x);

// Some morphism x -> y has a two-sided inverse.
bool objects_isomorphic(const LinearCategory& c, std::size_t x, std::size_t y);

struct HypothesisReport {
    bool connected = false;
    bool hom_finite = true;
    bool basic = false;
    bool totally_split = false;
    std::vector<std::optional<Vector>> characters;

    bool all() const { return connected && hom_finite && basic && totally_split; }
};

HypothesisReport hypothesis_checks(const LinearCategory& c);

bool is_connected(const LinearCategory& c);

} // namespace hmcl

#pragma once

#include "hmcl/bimod/bimodule.hpp"
#include "hmcl/covering/group.hpp"
#include "hmcl/lincat/presentation.hpp"

#include <map>
#include <optional>

namespace hmcl {

// Action of a finite group on a linear category by automorphisms, stored as
// one functor per group element.
class GroupAction {
public:
    // Closes the generator functors under composition. Throws InputError when
    // they do not generate the group or do not respect its multiplication.
    GroupAction(GroupPtr group, CategoryPtr category, const std::map<std::size_t, LinearFunctor>& generators);
    static GroupAction trivial(GroupPtr group, CategoryPtr category);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const LinearCategory& category() const { return *category_; }
    const CategoryPtr& category_ptr() const { return category_; }

    const LinearFunctor& functor(std::size_t s) const { return functors_.at(s); }
    std::size_t act(std::size_t s, std::size_t x) const { return functors_.at(s).object_map.at(x); }
    const Matrix& hom_map(std::size_t s, std::size_t y, std::size_t x) const { return functors_.at(s).hom_map(y, x); }
    // Some s with s x = y (the unique one for free actions).
    std::optional<std::size_t> transporter(std::size_t x, std::size_t y) const;

private:
    GroupPtr group_;
    CategoryPtr category_;
    std::vector<LinearFunctor> functors_;
};

// F after G.
LinearFunctor compose_functors(const LinearFunctor& f, const LinearFunctor& g);

// Image of one generator on a presented category: objects and arrows not
// listed are fixed. Arrows go to a scalar multiple of an arrow.
struct GeneratorImage {
    struct ArrowImage {
        std::string arrow;
        mpq_class coefficient;
        std::string image;
    };
    std::string element;
    std::vector<std::pair<std::string, std::string>> objects;
    std::vector<ArrowImage> arrows;
};

// Checks endpoints, invertibility of scalars and that every relation maps
// into the ideal; throws InputError otherwise.
GroupAction action_from_presentation(GroupPtr group, const PresentedCategory& c,
                                     const std::vector<GeneratorImage>& generators);

// No non-identity element fixes an object.
bool check_free_action(const GroupAction& a);

// s M, built as the twist along the functor of s^-1.
Bimodule twist_by(const GroupAction& a, std::size_t s, const Bimodule& m);
// s M == M for every s, literally (spaces, labels and actions).
bool is_twist_fixed(const GroupAction& a, const Bimodule& m);

struct QuotientData {
    GroupAction action;
    CategoryPtr quotient;
    LinearFunctor projection;
    std::vector<std::size_t> orbit_of;
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::size_t> section;
    // components[v * m + u][i] = (y, j): basis i of hom(v, u) is basis j of
    // hom(y, section[u]) for the member y of v.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> components;

    const std::pair<std::size_t, std::size_t>& component(std::size_t v, std::size_t u, std::size_t i) const
    {
        return components[v * orbits.size() + u].at(i);
    }
};

// Orbits are ordered by their lowest object; by default the section is the
// lowest object of each orbit. Throws PreconditionError for non-free actions
// and InputError for a section that is not one member per orbit.
QuotientData quotient_category(const GroupAction& a, const std::optional<std::vector<std::size_t>>& section = {});

} // namespace hmcl

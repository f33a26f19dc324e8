#pragma once

#include "hmcl/exactlin/subspace.hpp"
#include "hmcl/lincat/category.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hmcl {

struct Arrow {
    std::string name;
    std::string source;
    std::string target;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

// coefficient * (arrows[0] * arrows[1] * ... ), written in composition
// order: "b*a" means a first. An empty arrow list is the identity path of
// `vertex`.
struct PathTerm {
    mpq_class coefficient;
    std::vector<std::string> arrows;
    std::string vertex;
    friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

struct Relation {
    std::vector<PathTerm> terms;
    friend bool operator==(const Relation&, const Relation&) = default;
};

std::string to_string(const Relation& r);

struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;
    std::optional<unsigned> nilpotence_bound;

    // Throws InputError on unknown vertices, duplicate names, non-composable
    // or non-parallel relation paths, or an oriented cycle without a bound.
    void validate() const;
    friend bool operator==(const QuiverPresentation&, const QuiverPresentation&) = default;
};

// The category kQ/I presented by a quiver with relations, together with the
// path bookkeeping needed to reduce arbitrary paths.
class PresentedCategory {
public:
    PresentedCategory(const QuiverPresentation& q, Field field);

    const QuiverPresentation& presentation() const { return presentation_; }
    const CategoryPtr& category() const { return category_; }

    std::size_t arrow_index(const std::string& name) const;
    // Coordinates in hom(target, source) of the path through `arrows`
    // (arrow indices in composition order; empty means the identity path).
    Vector reduce_path(std::size_t source, std::size_t target, const std::vector<std::size_t>& arrows) const;
    Vector reduce_path(const std::vector<std::string>& arrow_names, const std::string& vertex = {}) const;
    // Nonzero paths x -> y (length below the bound) in basis order.
    const std::vector<std::vector<std::size_t>>& paths(std::size_t y, std::size_t x) const
    {
        return paths_[y * vertex_count() + x];
    }
    // The path represented by basis element i of hom(y, x).
    const std::vector<std::size_t>& basis_path(std::size_t y, std::size_t x, std::size_t i) const
    {
        return paths(y, x)[basis_paths_[y * vertex_count() + x].at(i)];
    }
    // Ideal inside the path space of hom(y, x); columns follow paths(y, x)
    // in reverse, so echelon pivots sit on the largest paths.
    const Subspace& ideal(std::size_t y, std::size_t x) const { return ideal_[y * vertex_count() + x]; }

private:
    std::size_t vertex_count() const { return presentation_.vertices.size(); }
    std::size_t vertex_index(const std::string& name) const;
    std::optional<std::size_t> path_position(std::size_t y, std::size_t x, const std::vector<std::size_t>& p) const;
    Vector reduce_in_path_space(std::size_t y, std::size_t x, const Vector& v) const;

    QuiverPresentation presentation_;
    Field field_;
    std::vector<std::vector<std::vector<std::size_t>>> paths_;
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> path_index_;
    std::vector<Subspace> ideal_;
    // Per (y, x): path positions forming the hom basis, ascending.
    std::vector<std::vector<std::size_t>> basis_paths_;
    CategoryPtr category_;
};

LinearCategory from_presentation(const QuiverPresentation& q, Field field);

// Renders a path in composition order, or "1_x" for an identity path.
std::string path_label(const QuiverPresentation& q, const std::vector<std::size_t>& arrows, std::size_t vertex);

} // namespace hmcl

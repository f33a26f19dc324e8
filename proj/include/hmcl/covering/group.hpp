#pragma once

#include "hmcl/exactlin/matrix.hpp"
#include "hmcl/exactlin/smith.hpp"
#include "hmcl/exactlin/subspace.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hmcl {

// Finite group given by its multiplication table: table[a][b] = a * b.
class FiniteGroup {
public:
    // Verifies closure, associativity, identity and inverses; throws InputError.
    FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

    static FiniteGroup trivial();
    // Elements 1, t, t^2, ..., t^(n-1).
    static FiniteGroup cyclic(std::size_t n, const std::string& generator = "t");
    // Elements named "(g,h)".
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& name(std::size_t a) const { return names_.at(a); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    // Throws InputError when unknown.
    std::size_t index(const std::string& name) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b)
    {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A word is a list of (generator index, exponent).
using GroupWord = std::vector<std::pair<std::size_t, long>>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;

    // Relator exponent sums: one row per relator, one column per generator.
    IntMatrix abelianization_matrix() const;
    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// <t | t^n>
GroupPresentation cyclic_presentation(std::size_t n, const std::string& generator = "t");
// Generators are all elements; relators a * b * (ab)^-1 for every pair.
GroupPresentation table_presentation(const FiniteGroup& g);
// Free rank of the abelianization.
std::size_t group_rank(const GroupPresentation& p);
// dim Hom(G, k+): free rank plus the invariant factors divisible by char k.
std::size_t hom_to_field_dim(const GroupPresentation& p, const Field& f);

// A representation of a finite group: action[s] is the matrix of s.
struct KGModule {
    GroupPtr group;
    std::size_t dim = 0;
    std::vector<Matrix> action;

    // Identity acts trivially and action[a] action[b] = action[ab]; throws InvariantError.
    void validate() const;
    static KGModule trivial(GroupPtr g, const Field& f, std::size_t dim = 1);
    static KGModule regular(GroupPtr g, const Field& f);
};

// Sum of the images of (s - 1) over all s.
Subspace augmentation_image(const KGModule& m);
// Intersection of the kernels of (s - 1).
Subspace fixed_points(const KGModule& m);

} // namespace hmcl

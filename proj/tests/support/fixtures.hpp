#pragma once

// Small quivers with relations used across the test suites.

#include "hmcl/error.hpp"
#include "hmcl/lincat/presentation.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace fixtures {

using hmcl::Arrow;
using hmcl::PathTerm;
using hmcl::QuiverPresentation;
using hmcl::Relation;

inline QuiverPresentation point()
{
    return {{"x"}, {}, {}, std::nullopt};
}

inline QuiverPresentation kronecker()
{
    return {{"x", "y"}, {{"a", "x", "y"}, {"b", "x", "y"}}, {}, std::nullopt};
}

// Galois covering of the Kronecker quiver by C2 = <t>.
inline QuiverPresentation crown()
{
    return {{"x", "y", "tx", "ty"},
            {{"a", "x", "y"}, {"b", "x", "ty"}, {"ta", "tx", "ty"}, {"tb", "tx", "y"}},
            {},
            std::nullopt};
}

inline QuiverPresentation a3()
{
    return {{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {}, std::nullopt};
}

inline QuiverPresentation a3_zero()
{
    QuiverPresentation q = a3();
    q.relations.push_back({{{1, {"b", "a"}, ""}}});
    return q;
}

inline QuiverPresentation loop(unsigned bound)
{
    return {{"x"}, {{"a", "x", "x"}}, {}, bound};
}

inline QuiverPresentation two_cycle(unsigned bound)
{
    return {{"x", "y"}, {{"a", "x", "y"}, {"b", "y", "x"}}, {}, bound};
}

// Commutative square: b*a = d*c.
inline QuiverPresentation square()
{
    return {{"x", "y", "z", "w"},
            {{"a", "x", "y"}, {"b", "y", "w"}, {"c", "x", "z"}, {"d", "z", "w"}},
            {{{{1, {"b", "a"}, ""}, {-1, {"d", "c"}, ""}}}},
            std::nullopt};
}

// Functor sending each basis morphism to the target basis morphism with the
// label given by `labels` (identity on labels not listed).
inline hmcl::LinearFunctor functor_from_labels(hmcl::CategoryPtr source, hmcl::CategoryPtr target,
                                               const std::map<std::string, std::string>& objects,
                                               const std::map<std::string, std::string>& labels)
{
    hmcl::LinearFunctor f;
    f.source = source;
    f.target = target;
    const std::size_t n = source->object_count();
    for (std::size_t x = 0; x < n; ++x)
        f.object_map.push_back(target->object_index(objects.at(source->object_name(x))));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            const auto& to = target->hom_labels(f.object_map[y], f.object_map[x]);
            hmcl::Matrix m(source->field(), to.size(), source->hom_dim(y, x));
            for (std::size_t j = 0; j < source->hom_dim(y, x); ++j) {
                const std::string& from = source->hom_labels(y, x)[j];
                auto it = labels.find(from);
                std::string image = it == labels.end() ? from : it->second;
                auto pos = std::find(to.begin(), to.end(), image);
                if (pos == to.end())
                    throw hmcl::InputError("no target morphism labelled " + image);
                m.set(static_cast<std::size_t>(pos - to.begin()), j, 1);
            }
            f.hom_maps.push_back(std::move(m));
        }
    f.validate();
    return f;
}

// crown -> kronecker, forgetting the t.
inline hmcl::LinearFunctor crown_projection(hmcl::CategoryPtr crown, hmcl::CategoryPtr kronecker)
{
    return functor_from_labels(crown, kronecker, {{"x", "x"}, {"y", "y"}, {"tx", "x"}, {"ty", "y"}},
                               {{"1_tx", "1_x"}, {"1_ty", "1_y"}, {"ta", "a"}, {"tb", "b"}});
}

// The deck transformation t of the crown (an involution).
inline hmcl::LinearFunctor crown_swap(hmcl::CategoryPtr crown)
{
    return functor_from_labels(crown, crown, {{"x", "tx"}, {"y", "ty"}, {"tx", "x"}, {"ty", "y"}},
                               {{"1_x", "1_tx"}, {"1_tx", "1_x"}, {"1_y", "1_ty"}, {"1_ty", "1_y"},
                                {"a", "ta"}, {"ta", "a"}, {"b", "tb"}, {"tb", "b"}});
}

} // namespace fixtures

#pragma once

#include "hmcl/exactlin/matrix.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace hmcl {

// Raw data of a finite k-linear category with chosen bases.
//
// Objects are 0..n-1. hom(y, x) denotes the morphisms x -> y and is indexed
// y * n + x. For basis element i of hom(z, y) and j of hom(y, x), the
// composite lives at products[(z * n + y) * n + x][i * dim hom(y, x) + j]
// as a coordinate vector in hom(z, x).
struct CategoryData {
    Field field;
    std::vector<std::string> objects;
    std::vector<std::vector<std::string>> hom_labels;
    std::vector<std::vector<Vector>> products;
    std::vector<Vector> identities;
};

class LinearCategory {
public:
    // Validates shapes, associativity on every basis triple and the unit
    // axioms; throws InvariantError on failure.
    explicit LinearCategory(CategoryData data);

    const Field& field() const { return data_.field; }
    std::size_t object_count() const { return data_.objects.size(); }
    const std::string& object_name(std::size_t x) const { return data_.objects.at(x); }
    const std::vector<std::string>& object_names() const { return data_.objects; }
    // Throws InputError when the name is unknown.
    std::size_t object_index(const std::string& name) const;

    std::size_t hom_dim(std::size_t y, std::size_t x) const { return data_.hom_labels[y * object_count() + x].size(); }
    const std::vector<std::string>& hom_labels(std::size_t y, std::size_t x) const
    {
        return data_.hom_labels[y * object_count() + x];
    }
    std::size_t total_dim() const;

    // Basis i of hom(z, y) composed after basis j of hom(y, x).
    const Vector& product(std::size_t z, std::size_t y, std::size_t x, std::size_t i, std::size_t j) const
    {
        std::size_t n = object_count();
        return data_.products[(z * n + y) * n + x][i * hom_dim(y, x) + j];
    }
    // f in hom(z, y) after g in hom(y, x).
    Vector compose(std::size_t z, std::size_t y, std::size_t x, const Vector& f, const Vector& g) const;
    const Vector& identity(std::size_t x) const { return data_.identities.at(x); }

    const CategoryData& data() const { return data_; }

    friend bool operator==(const LinearCategory& a, const LinearCategory& b) { return a.data_.field == b.data_.field &&
        a.data_.objects == b.data_.objects && a.data_.hom_labels == b.data_.hom_labels &&
        a.data_.products == b.data_.products && a.data_.identities == b.data_.identities; }

private:
    void validate() const;
    CategoryData data_;
};

using CategoryPtr = std::shared_ptr<const LinearCategory>;

inline CategoryPtr share(LinearCategory c)
{
    return std::make_shared<const LinearCategory>(std::move(c));
}

// Same objects and hom dimensions (not necessarily the same structure).
bool same_hom_dims(const LinearCategory& a, const LinearCategory& b);

// Disjoint union; objects of b follow those of a.
LinearCategory disjoint_union(const LinearCategory& a, const LinearCategory& b);

// k-linear functor between finite categories. hom_maps[y * n + x] is the
// matrix hom(y, x) -> hom(F y, F x) of the source category.
struct LinearFunctor {
    CategoryPtr source;
    CategoryPtr target;
    std::vector<std::size_t> object_map;
    std::vector<Matrix> hom_maps;

    const Matrix& hom_map(std::size_t y, std::size_t x) const { return hom_maps[y * source->object_count() + x]; }
    // Throws InvariantError unless identities and composition are preserved.
    void validate() const;
};

LinearFunctor identity_functor(CategoryPtr c);

} // namespace hmcl

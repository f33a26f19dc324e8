#pragma once

#include "hmcl/lincat/category.hpp"

#include <string>
#include <vector>

namespace hmcl {

// Spaces M(y, x) for every pair of objects (indexed y * n + x) with the
// left and right actions of the base category's basis morphisms.
//
// left[(z * n + y) * n + x][i]: basis i of hom(z, y) acting M(y, x) -> M(z, x)
// right[(y * n + x) * n + w][j]: basis j of hom(x, w) acting M(y, x) -> M(y, w)
struct BimoduleData {
    CategoryPtr base;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<Matrix>> left;
    std::vector<std::vector<Matrix>> right;
};

class Bimodule {
public:
    // Checks shapes, the unit laws, left and right associativity and the
    // middle law on every basis triple; throws InvariantError.
    explicit Bimodule(BimoduleData data);
    static Bimodule zero(CategoryPtr base);

    const LinearCategory& base() const { return *data_.base; }
    const CategoryPtr& base_ptr() const { return data_.base; }
    const Field& field() const { return data_.base->field(); }
    std::size_t object_count() const { return data_.base->object_count(); }
    std::size_t dim(std::size_t y, std::size_t x) const { return data_.labels[y * object_count() + x].size(); }
    const std::vector<std::string>& labels(std::size_t y, std::size_t x) const
    {
        return data_.labels[y * object_count() + x];
    }
    std::size_t total_dim() const;

    const Matrix& left(std::size_t z, std::size_t y, std::size_t x, std::size_t i) const
    {
        std::size_t n = object_count();
        return data_.left[(z * n + y) * n + x][i];
    }
    const Matrix& right(std::size_t y, std::size_t x, std::size_t w, std::size_t j) const
    {
        std::size_t n = object_count();
        return data_.right[(y * n + x) * n + w][j];
    }
    // Action matrices of an arbitrary morphism given by coordinates.
    Matrix left_matrix(std::size_t z, std::size_t y, std::size_t x, const Vector& c) const;
    Matrix right_matrix(std::size_t y, std::size_t x, std::size_t w, const Vector& c) const;

    const BimoduleData& data() const { return data_; }

    // Same base (by value), spaces, labels and action matrices.
    friend bool operator==(const Bimodule& a, const Bimodule& b);

private:
    void validate() const;
    BimoduleData data_;
};

// Same action matrices and dimensions, ignoring labels.
bool same_structure(const Bimodule& a, const Bimodule& b);

Bimodule standard(CategoryPtr c);

// D M(y, x) = M(x, y)*, with (c phi)(m) = phi(m c) and (phi c)(m) = phi(c m).
Bimodule dual(const Bimodule& m);

// L M(y, x) = M(F y, F x) with actions through F.
Bimodule lift(const LinearFunctor& f, const Bimodule& m);

// Twist by an automorphism s of the base, given as the functor of s^-1:
// (s M)(y, x) = M(s^-1 y, s^-1 x) and c . u = (s^-1 c) u.
Bimodule twist(const Bimodule& m, const LinearFunctor& s_inverse);

// (M1 (x) M2)(y, x) = direct sum over z of M1(y, z) (x) M2(z, x), with the
// outer actions only (no quotient by the middle action).
Bimodule tensor_bimodules(const Bimodule& m1, const Bimodule& m2);

// Always true: every space is stored with a finite basis.
bool is_locally_finite(const Bimodule& m);

} // namespace hmcl

#include "hmcl/bimod/bimodule.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

namespace {

Matrix combine(const Field& f, const std::vector<Matrix>& basis_matrices, const Vector& c, std::size_t rows,
               std::size_t cols)
{
    if (c.size() != basis_matrices.size())
        throw PreconditionError("morphism coordinates have wrong length");
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0)
            out = out + basis_matrices[i].scaled(c[i]);
    return out;
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

} // namespace

Bimodule::Bimodule(BimoduleData data) : data_(std::move(data))
{
    validate();
}

Bimodule Bimodule::zero(CategoryPtr base)
{
    const std::size_t n = base->object_count();
    const Field& f = base->field();
    BimoduleData d;
    d.base = base;
    d.labels.assign(n * n, {});
    d.left.resize(n * n * n);
    d.right.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                d.left[(a * n + b) * n + c].assign(base->hom_dim(a, b), Matrix(f, 0, 0));
                d.right[(a * n + b) * n + c].assign(base->hom_dim(b, c), Matrix(f, 0, 0));
            }
    return Bimodule(std::move(d));
}

std::size_t Bimodule::total_dim() const
{
    std::size_t t = 0;
    for (const auto& l : data_.labels)
        t += l.size();
    return t;
}

Matrix Bimodule::left_matrix(std::size_t z, std::size_t y, std::size_t x, const Vector& c) const
{
    std::size_t n = object_count();
    return combine(field(), data_.left[(z * n + y) * n + x], c, dim(z, x), dim(y, x));
}

Matrix Bimodule::right_matrix(std::size_t y, std::size_t x, std::size_t w, const Vector& c) const
{
    std::size_t n = object_count();
    return combine(field(), data_.right[(y * n + x) * n + w], c, dim(y, w), dim(y, x));
}

void Bimodule::validate() const
{
    const LinearCategory& c = base();
    const std::size_t n = c.object_count();
    if (data_.labels.size() != n * n || data_.left.size() != n * n * n || data_.right.size() != n * n * n)
        throw InvariantError("bimodule data has inconsistent sizes");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e) {
                const auto& l = data_.left[(a * n + b) * n + e];
                if (l.size() != c.hom_dim(a, b))
                    throw InvariantError("left action needs one matrix per basis morphism");
                for (const auto& m : l)
                    if (m.rows() != dim(a, e) || m.cols() != dim(b, e) || !(m.field() == field()))
                        throw InvariantError("left action matrix has wrong shape");
                const auto& r = data_.right[(a * n + b) * n + e];
                if (r.size() != c.hom_dim(b, e))
                    throw InvariantError("right action needs one matrix per basis morphism");
                for (const auto& m : r)
                    if (m.rows() != dim(a, e) || m.cols() != dim(a, b) || !(m.field() == field()))
                        throw InvariantError("right action matrix has wrong shape");
            }
    // Units.
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            Matrix id = Matrix::identity(field(), dim(y, x));
            if (left_matrix(y, y, x, c.identity(y)) != id || right_matrix(y, x, x, c.identity(x)) != id)
                throw InvariantError("identity morphisms do not act as identities on M(" + c.object_name(y) + ", " +
                                     c.object_name(x) + ")");
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t x = 0; x < n; ++x) {
                    // (c c') m = c (c' m) for c in hom(a, b), c' in hom(b, y), m in M(y, x)
                    for (std::size_t i = 0; i < c.hom_dim(a, b); ++i)
                        for (std::size_t j = 0; j < c.hom_dim(b, y); ++j)
                            if (left_matrix(a, y, x, c.product(a, b, y, i, j)) != left(a, b, x, i) * left(b, y, x, j))
                                throw InvariantError("left action is not associative");
                    // m (c c') = (m c) c' for m in M(a, b), c in hom(b, y), c' in hom(y, x)
                    for (std::size_t i = 0; i < c.hom_dim(b, y); ++i)
                        for (std::size_t j = 0; j < c.hom_dim(y, x); ++j)
                            if (right_matrix(a, b, x, c.product(b, y, x, i, j)) != right(a, y, x, j) * right(a, b, y, i))
                                throw InvariantError("right action is not associative");
                    // (c m) c' = c (m c') for c in hom(a, b), m in M(b, y), c' in hom(y, x)
                    for (std::size_t i = 0; i < c.hom_dim(a, b); ++i)
                        for (std::size_t j = 0; j < c.hom_dim(y, x); ++j)
                            if (right(a, y, x, j) * left(a, b, y, i) != left(a, b, x, i) * right(b, y, x, j))
                                throw InvariantError("left and right actions do not commute");
                }
}

bool operator==(const Bimodule& a, const Bimodule& b)
{
    return *a.data_.base == *b.data_.base && a.data_.labels == b.data_.labels && same_structure(a, b);
}

bool same_structure(const Bimodule& a, const Bimodule& b)
{
    if (!same_hom_dims(a.base(), b.base()))
        return false;
    const std::size_t n = a.object_count();
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (a.dim(y, x) != b.dim(y, x))
                return false;
    return a.data().left == b.data().left && a.data().right == b.data().right;
}

Bimodule standard(CategoryPtr c)
{
    const std::size_t n = c->object_count();
    const Field& f = c->field();
    BimoduleData d;
    d.base = c;
    d.labels = c->data().hom_labels;
    d.left.resize(n * n * n);
    d.right.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t i = 0; i < c->hom_dim(z, y); ++i) {
                    std::vector<Vector> cols;
                    for (std::size_t j = 0; j < c->hom_dim(y, x); ++j)
                        cols.push_back(c->product(z, y, x, i, j));
                    d.left[(z * n + y) * n + x].push_back(Matrix::from_columns(f, cols, c->hom_dim(z, x)));
                }
                // m in hom(z, y) times basis j of hom(y, x)
                for (std::size_t j = 0; j < c->hom_dim(y, x); ++j) {
                    std::vector<Vector> cols;
                    for (std::size_t k = 0; k < c->hom_dim(z, y); ++k)
                        cols.push_back(c->product(z, y, x, k, j));
                    d.right[(z * n + y) * n + x].push_back(Matrix::from_columns(f, cols, c->hom_dim(z, x)));
                }
            }
    return Bimodule(std::move(d));
}

namespace {

std::string dual_label(const std::string& l)
{
    if (!l.empty() && l.back() == '*')
        return l.substr(0, l.size() - 1);
    return l + "*";
}

} // namespace

Bimodule dual(const Bimodule& m)
{
    if (!is_locally_finite(m))
        throw PreconditionError("dual of a bimodule that is not locally finite");
    const std::size_t n = m.object_count();
    BimoduleData d;
    d.base = m.base_ptr();
    d.labels.resize(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            for (const auto& l : m.labels(x, y))
                d.labels[y * n + x].push_back(dual_label(l));
    d.left.resize(n * n * n);
    d.right.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                // c in hom(z, y): D(y, x) -> D(z, x) is the transpose of M(x, z) -> M(x, y), m -> m c
                for (std::size_t i = 0; i < m.base().hom_dim(z, y); ++i)
                    d.left[(z * n + y) * n + x].push_back(m.right(x, z, y, i).transpose());
                // c in hom(y, x): D(z, y) -> D(z, x) is the transpose of M(x, z) -> M(y, z), m -> c m
                for (std::size_t j = 0; j < m.base().hom_dim(y, x); ++j)
                    d.right[(z * n + y) * n + x].push_back(m.left(y, x, z, j).transpose());
            }
    return Bimodule(std::move(d));
}

Bimodule lift(const LinearFunctor& f, const Bimodule& m)
{
    if (!(*f.target == m.base()))
        throw PreconditionError("lift: bimodule is not over the functor's target");
    const LinearCategory& c = *f.source;
    const std::size_t n = c.object_count();
    const auto& o = f.object_map;
    BimoduleData d;
    d.base = f.source;
    d.labels.resize(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            d.labels[y * n + x] = m.labels(o[y], o[x]);
    d.left.resize(n * n * n);
    d.right.resize(n * n * n);
    for (std::size_t z = 0; z < n; ++z)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t i = 0; i < c.hom_dim(z, y); ++i) {
                    Vector image = f.hom_map(z, y).apply(unit_vector(c.hom_dim(z, y), i));
                    d.left[(z * n + y) * n + x].push_back(m.left_matrix(o[z], o[y], o[x], image));
                }
                for (std::size_t j = 0; j < c.hom_dim(y, x); ++j) {
                    Vector image = f.hom_map(y, x).apply(unit_vector(c.hom_dim(y, x), j));
                    d.right[(z * n + y) * n + x].push_back(m.right_matrix(o[z], o[y], o[x], image));
                }
            }
    return Bimodule(std::move(d));
}

Bimodule twist(const Bimodule& m, const LinearFunctor& s_inverse)
{
    if (!(*s_inverse.source == m.base()) || !(*s_inverse.target == m.base()))
        throw PreconditionError("twist: the automorphism must act on the bimodule's base");
    return lift(s_inverse, m);
}

Bimodule tensor_bimodules(const Bimodule& m1, const Bimodule& m2)
{
    if (!(m1.base() == m2.base()))
        throw PreconditionError("tensor product of bimodules over different categories");
    const std::size_t n = m1.object_count();
    const Field& f = m1.field();
    const LinearCategory& c = m1.base();
    // offset[(y * n + x) * n + z]: start of the z-summand inside (M1 (x) M2)(y, x)
    std::vector<std::size_t> offset(n * n * n);
    BimoduleData d;
    d.base = m1.base_ptr();
    d.labels.resize(n * n);
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t z = 0; z < n; ++z) {
                offset[(y * n + x) * n + z] = d.labels[y * n + x].size();
                for (const auto& a : m1.labels(y, z))
                    for (const auto& b : m2.labels(z, x))
                        d.labels[y * n + x].push_back(a + " (x) " + b);
            }
    auto dim = [&](std::size_t y, std::size_t x) { return d.labels[y * n + x].size(); };
    d.left.resize(n * n * n);
    d.right.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                // c in hom(a, y) acts on M1(y, z) (x) M2(z, x) -> M1(a, z) (x) M2(z, x)
                for (std::size_t i = 0; i < c.hom_dim(a, y); ++i) {
                    MatrixBuilder b(f, dim(a, x), dim(y, x));
                    for (std::size_t z = 0; z < n; ++z) {
                        Matrix block = Matrix::kronecker(m1.left(a, y, z, i), Matrix::identity(f, m2.dim(z, x)));
                        for (std::size_t r = 0; r < block.rows(); ++r)
                            for (const auto& e : block.row(r))
                                b.add(offset[(a * n + x) * n + z] + r, offset[(y * n + x) * n + z] + e.col, e.value);
                    }
                    d.left[(a * n + y) * n + x].push_back(std::move(b).build());
                }
                // c in hom(y, x) acts on M1(a, z) (x) M2(z, y) -> M1(a, z) (x) M2(z, x)
                for (std::size_t j = 0; j < c.hom_dim(y, x); ++j) {
                    MatrixBuilder b(f, dim(a, x), dim(a, y));
                    for (std::size_t z = 0; z < n; ++z) {
                        Matrix block = Matrix::kronecker(Matrix::identity(f, m1.dim(a, z)), m2.right(z, y, x, j));
                        for (std::size_t r = 0; r < block.rows(); ++r)
                            for (const auto& e : block.row(r))
                                b.add(offset[(a * n + x) * n + z] + r, offset[(a * n + y) * n + z] + e.col, e.value);
                    }
                    d.right[(a * n + y) * n + x].push_back(std::move(b).build());
                }
            }
    return Bimodule(std::move(d));
}

bool is_locally_finite(const Bimodule&)
{
    return true;
}

} // namespace hmcl

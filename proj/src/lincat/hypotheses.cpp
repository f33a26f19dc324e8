#include "hmcl/lincat/hypotheses.hpp"

#include "hmcl/error.hpp"

#include <numeric>

namespace hmcl {

namespace {

// Left multiplication by basis element i of hom(x, x).
Matrix left_multiplication(const LinearCategory& c, std::size_t x, std::size_t i)
{
    const std::size_t d = c.hom_dim(x, x);
    std::vector<Vector> columns;
    for (std::size_t j = 0; j < d; ++j)
        columns.push_back(c.product(x, x, x, i, j));
    return Matrix::from_columns(c.field(), columns, d);
}

bool is_nilpotent(const Matrix& m)
{
    Matrix p = m;
    for (std::size_t k = 1; k < m.rows() && !p.is_zero(); ++k)
        p = p * m;
    return p.is_zero();
}

Scalar trace(const Matrix& m)
{
    Scalar t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        t = m.field().add(t, m.at(i, i));
    return t;
}

} // namespace

std::optional<Vector> local_character(const LinearCategory& c, std::size_t x)
{
    const Field& f = c.field();
    const std::size_t d = c.hom_dim(x, x);
    if (d == 0)
        return std::nullopt;
    // chi(b) is the only eigenvalue of left multiplication by b.
    Vector chi(d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix l = left_multiplication(c, x, i);
        auto works = [&](const Scalar& lambda) {
            return is_nilpotent(l - Matrix::identity(f, d).scaled(lambda));
        };
        std::optional<Scalar> found;
        if (f.characteristic() == 0 || d % f.characteristic() != 0) {
            Scalar lambda = f.div(trace(l), f.from_int(static_cast<long>(d)));
            if (works(lambda))
                found = lambda;
        } else {
            for (long v = 0; v < static_cast<long>(f.characteristic()) && !found; ++v)
                if (works(f.from_int(v)))
                    found = f.from_int(v);
        }
        if (!found)
            return std::nullopt;
        chi[i] = *found;
    }
    auto value = [&](const Vector& v) {
        Scalar s = 0;
        for (std::size_t k = 0; k < d; ++k)
            s = f.add(s, f.mul(chi[k], v[k]));
        return s;
    };
    if (value(c.identity(x)) != 1)
        return std::nullopt;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (value(c.product(x, x, x, i, j)) != f.mul(chi[i], chi[j]))
                return std::nullopt;
    // The kernel is an ideal now; it must also be nilpotent.
    Subspace n = kernel_basis(Matrix::from_rows(f, {chi}, d));
    for (std::size_t r = 0; r < n.dim(); ++r) {
        Vector v = n.basis().row_vector(r);
        Matrix l(f, d, d);
        for (std::size_t i = 0; i < d; ++i)
            if (sgn(v[i]) != 0)
                l = l + left_multiplication(c, x, i).scaled(v[i]);
        if (!is_nilpotent(l))
            return std::nullopt;
    }
    return chi;
}

std::optional<Subspace> nilpotent_part(const LinearCategory& c, std::size_t x)
{
    auto chi = local_character(c, x);
    if (!chi)
        return std::nullopt;
    return kernel_basis(Matrix::from_rows(c.field(), {*chi}, chi->size()));
}

namespace {

bool isomorphic_split(const LinearCategory& c, std::size_t x, std::size_t y, const Vector& chi_x)
{
    const Field& f = c.field();
    for (std::size_t i = 0; i < c.hom_dim(y, x); ++i)
        for (std::size_t j = 0; j < c.hom_dim(x, y); ++j) {
            const Vector& gf = c.product(x, y, x, j, i);
            Scalar s = 0;
            for (std::size_t k = 0; k < gf.size(); ++k)
                s = f.add(s, f.mul(chi_x[k], gf[k]));
            if (sgn(s) != 0)
                return true;
        }
    return false;
}

// For each basis morphism f: x -> y, solve linearly for g with gf = 1 and fg = 1.
bool isomorphic_by_solving(const LinearCategory& c, std::size_t x, std::size_t y)
{
    const Field& f = c.field();
    const std::size_t m = c.hom_dim(x, y), dxx = c.hom_dim(x, x), dyy = c.hom_dim(y, y);
    if (m == 0)
        return false;
    for (std::size_t i = 0; i < c.hom_dim(y, x); ++i) {
        std::vector<Vector> columns;
        for (std::size_t j = 0; j < m; ++j) {
            Vector col = c.product(x, y, x, j, i);
            const Vector& fg = c.product(y, x, y, i, j);
            col.insert(col.end(), fg.begin(), fg.end());
            columns.push_back(std::move(col));
        }
        Vector rhs = c.identity(x);
        rhs.insert(rhs.end(), c.identity(y).begin(), c.identity(y).end());
        if (solve(Matrix::from_columns(f, columns, dxx + dyy), rhs))
            return true;
    }
    return false;
}

} // namespace

bool objects_isomorphic(const LinearCategory& c, std::size_t x, std::size_t y)
{
    if (x == y)
        return true;
    auto cx = local_character(c, x);
    auto cy = local_character(c, y);
    if (cx && cy)
        return isomorphic_split(c, x, y, *cx);
    return isomorphic_by_solving(c, x, y);
}

bool is_connected(const LinearCategory& c)
{
    const std::size_t n = c.object_count();
    if (n == 0)
        return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
            if (c.hom_dim(y, x) > 0)
                parent[find(y)] = find(x);
    for (std::size_t v = 1; v < n; ++v)
        if (find(v) != find(0))
            return false;
    return true;
}

HypothesisReport hypothesis_checks(const LinearCategory& c)
{
    HypothesisReport r;
    const std::size_t n = c.object_count();
    r.connected = is_connected(c);
    r.totally_split = true;
    for (std::size_t x = 0; x < n; ++x) {
        r.characters.push_back(local_character(c, x));
        if (!r.characters.back())
            r.totally_split = false;
    }
    r.basic = true;
    for (std::size_t x = 0; x < n && r.basic; ++x)
        for (std::size_t y = x + 1; y < n && r.basic; ++y) {
            bool iso = r.characters[x] && r.characters[y] ? isomorphic_split(c, x, y, *r.characters[x])
                                                          : isomorphic_by_solving(c, x, y);
            if (iso)
                r.basic = false;
        }
    return r;
}

} // namespace hmcl

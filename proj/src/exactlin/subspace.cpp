#include "hmcl/exactlin/subspace.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

Subspace::Subspace(const Matrix& generators)
{
    EchelonForm ef = row_echelon(generators);
    basis_ = std::move(ef.rows);
    pivots_ = std::move(ef.pivots);
}

Subspace Subspace::zero(Field field, std::size_t ambient_dim)
{
    return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim)
{
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        piv[i] = i;
    return Subspace(Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::coordinate(Field field, std::size_t ambient_dim, const std::vector<std::size_t>& axes)
{
    Matrix m(field, axes.size(), ambient_dim);
    for (std::size_t i = 0; i < axes.size(); ++i)
        m.set(i, axes[i], field.one());
    return Subspace(m);
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_dim())
        throw PreconditionError("subspace: ambient dimension mismatch");
    const Field& f = field();
    Vector w = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Scalar c = w[pivots_[i]];
        if (sgn(c) == 0)
            continue;
        for (const auto& e : basis_.row(i))
            w[e.col] = f.sub(w[e.col], f.mul(c, e.value));
    }
    return w;
}

bool Subspace::contains(const Vector& v) const
{
    return is_zero(reduce(v));
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim() != ambient_dim())
        throw PreconditionError("subspace: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row_vector(i)))
            return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const
{
    if (!contains(v))
        throw PreconditionError("subspace: vector not contained");
    Vector c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        c[i] = v[pivots_[i]];
    return c;
}

Subspace Subspace::annihilator() const
{
    return kernel_basis(basis_);
}

Subspace kernel_basis(const Matrix& m)
{
    const Field& f = m.field();
    EchelonForm ef = row_echelon(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto p : ef.pivots)
        is_pivot[p] = 1;
    // Column c of each echelon row, for the free columns.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> by_col(m.cols());
    for (std::size_t i = 0; i < ef.rows.rows(); ++i)
        for (const auto& e : ef.rows.row(i))
            if (!is_pivot[e.col])
                by_col[e.col].emplace_back(ef.pivots[i], e.value);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    MatrixBuilder b(f, free_cols.size(), m.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t c = free_cols[k];
        b.add(k, c, f.one());
        for (const auto& [p, v] : by_col[c])
            b.add(k, p, f.neg(v));
    }
    return Subspace(std::move(b).build());
}

Subspace image_basis(const Matrix& m)
{
    return Subspace(m.transpose());
}

static void require_compatible(const Subspace& a, const Subspace& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw PreconditionError("subspace ambient mismatch: " + std::to_string(a.ambient_dim()) + " vs " +
                                std::to_string(b.ambient_dim()));
    if (!(a.field() == b.field()))
        throw PreconditionError("subspace field mismatch");
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    return Subspace(Matrix::vstack(a.basis(), b.basis()));
}

Subspace intersection(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    if (a.dim() == 0 || b.dim() == 0)
        return Subspace::zero(a.field(), a.ambient_dim());
    // (u, w) with u A = w B; the intersection is spanned by u A.
    Matrix stacked = Matrix::vstack(a.basis(), b.basis().scaled(a.field().neg(a.field().one())));
    Subspace rel = kernel_basis(stacked.transpose());
    if (rel.dim() == 0)
        return Subspace::zero(a.field(), a.ambient_dim());
    std::vector<std::size_t> first(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        first[i] = i;
    Matrix u = rel.basis().select_cols(first);
    return Subspace(u * a.basis());
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b)
{
    return a.dim() - intersection(a, b).dim();
}

Subspace preimage(const Matrix& m, const Subspace& s)
{
    if (s.ambient_dim() != m.rows())
        throw PreconditionError("preimage: subspace lives in k^" + std::to_string(s.ambient_dim()) +
                                " but the map lands in k^" + std::to_string(m.rows()));
    Subspace ann = s.annihilator();
    return kernel_basis(ann.basis() * m);
}

Subspace map_subspace(const Matrix& m, const Subspace& s)
{
    if (s.ambient_dim() != m.cols())
        throw PreconditionError("map_subspace: shape mismatch");
    return Subspace(s.basis() * m.transpose());
}

SubspaceRelations subspace_ops(const Subspace& a, const Subspace& b)
{
    require_compatible(a, b);
    Subspace meet = intersection(a, b);
    std::size_t qd = a.dim() - meet.dim();
    return SubspaceRelations{subspace_sum(a, b), std::move(meet), a.contains(b), qd};
}

QuotientMap::QuotientMap(Subspace kernel) : kernel_(std::move(kernel))
{
    const Field& f = kernel_.field();
    std::size_t n = kernel_.ambient_dim();
    std::vector<std::int64_t> slot(n, -1);
    std::vector<char> is_pivot(n, 0);
    for (auto p : kernel_.pivots())
        is_pivot[p] = 1;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            slot[c] = static_cast<std::int64_t>(complement_.size());
            complement_.push_back(c);
        }
    // e_c maps to e_slot(c) for free c; a pivot column p maps to minus the
    // free part of its echelon row.
    MatrixBuilder b(f, complement_.size(), n);
    for (std::size_t c = 0; c < n; ++c)
        if (slot[c] >= 0)
            b.add(static_cast<std::size_t>(slot[c]), c, f.one());
    for (std::size_t i = 0; i < kernel_.dim(); ++i) {
        std::size_t p = kernel_.pivots()[i];
        for (const auto& e : kernel_.basis().row(i))
            if (slot[e.col] >= 0)
                b.add(static_cast<std::size_t>(slot[e.col]), p, f.neg(e.value));
    }
    projection_ = std::move(b).build();
}

Matrix QuotientMap::section() const
{
    const Field& f = kernel_.field();
    Matrix s(f, ambient_dim(), dim());
    for (std::size_t i = 0; i < complement_.size(); ++i)
        s.set(complement_[i], i, f.one());
    return s;
}

} // namespace hmcl

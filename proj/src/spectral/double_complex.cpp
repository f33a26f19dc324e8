#include "hmcl/spectral/double_complex.hpp"

#include "hmcl/error.hpp"
#include "hmcl/spectral/group_homology.hpp"

#include <algorithm>

namespace hmcl {

void DoubleComplex::validate() const
{
    if (dims.size() != P + 1 || horizontal.size() != P + 1 || vertical.size() != P + 1)
        throw InvariantError("double complex has the wrong number of columns");
    for (std::size_t p = 0; p <= P; ++p) {
        if (dims[p].size() != Q + 1 || horizontal[p].size() != Q + 1 || vertical[p].size() != Q + 1)
            throw InvariantError("double complex has the wrong number of rows");
        for (std::size_t q = 0; q <= Q; ++q) {
            const Matrix& h = horizontal[p][q];
            const Matrix& v = vertical[p][q];
            if (h.cols() != dims[p][q] || h.rows() != (p ? dims[p - 1][q] : 0) || v.cols() != dims[p][q] ||
                v.rows() != (q ? dims[p][q - 1] : 0))
                throw InvariantError("double complex map has the wrong shape at (" + std::to_string(p) + ", " +
                                     std::to_string(q) + ")");
        }
    }
    for (std::size_t p = 0; p <= P; ++p)
        for (std::size_t q = 0; q <= Q; ++q) {
            const std::string at = " at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
            if (p >= 2 && !(horizontal[p - 1][q] * horizontal[p][q]).is_zero())
                throw InvariantError("horizontal differential does not square to zero" + at);
            if (q >= 2 && !(vertical[p][q - 1] * vertical[p][q]).is_zero())
                throw InvariantError("vertical differential does not square to zero" + at);
            if (p >= 1 && q >= 1 &&
                !(horizontal[p][q - 1] * vertical[p][q] + vertical[p - 1][q] * horizontal[p][q]).is_zero())
                throw InvariantError("differentials do not anticommute" + at);
        }
}

DoubleComplex DoubleComplex::transposed() const
{
    DoubleComplex t{field, Q, P, {}, {}, {}};
    t.dims.assign(Q + 1, std::vector<std::size_t>(P + 1));
    t.horizontal.assign(Q + 1, std::vector<Matrix>(P + 1));
    t.vertical.assign(Q + 1, std::vector<Matrix>(P + 1));
    for (std::size_t p = 0; p <= P; ++p)
        for (std::size_t q = 0; q <= Q; ++q) {
            t.dims[q][p] = dims[p][q];
            t.horizontal[q][p] = vertical[p][q];
            t.vertical[q][p] = horizontal[p][q];
        }
    return t;
}

DoubleComplex bar_double_complex(const EquivariantComplex& x, std::size_t P)
{
    if (x.complex.direction != Direction::Chain)
        throw PreconditionError("bar_double_complex needs a chain complex");
    const Field& f = x.complex.field;
    const std::size_t Q = x.complex.top();
    DoubleComplex d{f, P, Q, {}, {}, {}};
    d.dims.assign(P + 1, std::vector<std::size_t>(Q + 1));
    d.horizontal.assign(P + 1, std::vector<Matrix>(Q + 1));
    d.vertical.assign(P + 1, std::vector<Matrix>(Q + 1));
    for (std::size_t q = 0; q <= Q; ++q) {
        BasedComplex row = group_chain_complex(x.actions[q], P);
        for (std::size_t p = 0; p <= P; ++p) {
            d.dims[p][q] = row.dims[p];
            d.horizontal[p][q] = row.differentials[p];
        }
    }
    std::size_t tuples = 1;
    for (std::size_t p = 0; p <= P; ++p) {
        const Matrix id = Matrix::identity(f, tuples);
        for (std::size_t q = 0; q <= Q; ++q) {
            Matrix v = Matrix::kronecker(id, x.complex.differentials[q]);
            d.vertical[p][q] = p % 2 ? v.scaled(f.from_int(-1)) : v;
        }
        tuples *= x.actions.at(0).group->order();
    }
    d.validate();
    return d;
}

TotalComplex total_complex(const DoubleComplex& d)
{
    const std::size_t top = d.P + d.Q;
    TotalComplex t{{Direction::Chain, d.field, {}, {}, {}}, {}};
    for (std::size_t n = 0; n <= top; ++n) {
        std::vector<std::size_t> off(d.P + 2, 0);
        for (std::size_t p = 0; p <= d.P; ++p) {
            std::size_t size = (p <= n && n - p <= d.Q) ? d.dims[p][n - p] : 0;
            off[p + 1] = off[p] + size;
        }
        t.complex.dims.push_back(off[d.P + 1]);
        t.offsets.push_back(std::move(off));
    }
    for (std::size_t n = 0; n <= top; ++n) {
        if (n == 0) {
            t.complex.differentials.push_back(Matrix(d.field, 0, t.complex.dims[0]));
            continue;
        }
        MatrixBuilder b(d.field, t.complex.dims[n - 1], t.complex.dims[n]);
        auto place = [&](const Matrix& m, std::size_t row_off, std::size_t col_off) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (const auto& e : m.row(r))
                    b.add(row_off + r, col_off + e.col, e.value);
        };
        for (std::size_t p = 0; p <= d.P; ++p) {
            if (p > n || n - p > d.Q)
                continue;
            const std::size_t q = n - p;
            if (p >= 1)
                place(d.horizontal[p][q], t.offsets[n - 1][p - 1], t.offsets[n][p]);
            if (q >= 1)
                place(d.vertical[p][q], t.offsets[n - 1][p], t.offsets[n][p]);
        }
        t.complex.differentials.push_back(std::move(b).build());
    }
    t.complex.validate();
    return t;
}

bool reliable_entry(std::size_t P, std::size_t Q, std::size_t p, std::size_t q)
{
    return p + q + 1 <= std::min(P, Q);
}

namespace {

// Length of F_s Tot_n, the blocks with p <= s.
std::size_t prefix(const TotalComplex& t, std::size_t P, long s, std::size_t n)
{
    if (s < 0)
        return 0;
    return t.offsets[n][std::min<std::size_t>(static_cast<std::size_t>(s) + 1, P + 1)];
}

// A(r, s, n) = {c in F_s Tot_n : d c in F_{s-r} Tot_{n-1}}.
Subspace filtered_cycles(const TotalComplex& t, std::size_t P, long r, long s, std::size_t n)
{
    const Field& f = t.complex.field;
    const std::size_t dim = t.complex.dims[n];
    const std::size_t len = prefix(t, P, s, n);
    if (len == 0)
        return Subspace::zero(f, dim);
    std::vector<std::size_t> cols(len);
    for (std::size_t i = 0; i < len; ++i)
        cols[i] = i;
    Subspace inside = Subspace::full(f, len);
    if (n > 0) {
        const Matrix& d = t.complex.differentials[n];
        std::vector<std::size_t> rows;
        for (std::size_t i = prefix(t, P, s - r, n - 1); i < d.rows(); ++i)
            rows.push_back(i);
        inside = kernel_basis(d.select_rows(rows).select_cols(cols));
    }
    Matrix padded(f, inside.dim(), dim);
    for (std::size_t i = 0; i < inside.dim(); ++i)
        padded.set_row(i, inside.basis().row(i));
    return Subspace(padded);
}

Subspace project_block(const TotalComplex& t, const Subspace& s, std::size_t n, std::size_t p)
{
    std::vector<std::size_t> cols;
    for (std::size_t i = t.offsets[n][p]; i < t.offsets[n][p + 1]; ++i)
        cols.push_back(i);
    return Subspace(s.basis().select_cols(cols));
}

std::vector<SSPage> column_pages(const DoubleComplex& d, std::size_t r_max)
{
    TotalComplex t = total_complex(d);
    const std::size_t top = d.P + d.Q;
    std::vector<SSPage> pages;
    for (std::size_t r = 0; r <= r_max; ++r) {
        const long R = static_cast<long>(r);
        SSPage page;
        page.r = r;
        page.P = d.P;
        page.Q = d.Q;
        page.dims.assign(d.P + 1, std::vector<std::size_t>(d.Q + 1));
        page.ranks.assign(d.P + 1, std::vector<std::size_t>(d.Q + 1));
        page.reliable.assign(d.P + 1, std::vector<bool>(d.Q + 1));
        page.cycles.assign(d.P + 1, std::vector<Subspace>(d.Q + 1));
        page.boundaries.assign(d.P + 1, std::vector<Subspace>(d.Q + 1));
        std::vector<std::vector<Subspace>> full_cycles(d.P + 1, std::vector<Subspace>(d.Q + 1));
        for (std::size_t p = 0; p <= d.P; ++p)
            for (std::size_t q = 0; q <= d.Q; ++q) {
                const std::size_t n = p + q;
                const long s = static_cast<long>(p);
                Subspace a = filtered_cycles(t, d.P, R, s, n);
                Subspace b = filtered_cycles(t, d.P, R - 1, s - 1, n);
                if (n + 1 <= top)
                    b = subspace_sum(b, map_subspace(t.complex.differentials[n + 1],
                                                     filtered_cycles(t, d.P, R - 1, s + R - 1, n + 1)));
                page.cycles[p][q] = project_block(t, a, n, p);
                page.boundaries[p][q] = project_block(t, b, n, p);
                if (!page.cycles[p][q].contains(page.boundaries[p][q]))
                    throw InvariantError("page boundaries are not inside the cycles");
                page.dims[p][q] = page.cycles[p][q].dim() - page.boundaries[p][q].dim();
                page.reliable[p][q] = reliable_entry(d.P, d.Q, p, q);
                full_cycles[p][q] = std::move(a);
            }
        // d_r: (p, q) -> (p - r, q + r - 1).
        for (std::size_t p = 0; p <= d.P; ++p)
            for (std::size_t q = 0; q <= d.Q; ++q) {
                const std::size_t n = p + q;
                if (p < r || n == 0 || q + r - 1 > d.Q || (r == 0 && q == 0))
                    continue;
                const std::size_t tp = p - r, tq = q + r - 1;
                Subspace img = map_subspace(t.complex.differentials[n], full_cycles[p][q]);
                Subspace proj = project_block(t, img, n - 1, tp);
                const Subspace& bt = page.boundaries[tp][tq];
                page.ranks[p][q] = subspace_sum(proj, bt).dim() - bt.dim();
            }
        pages.push_back(std::move(page));
    }
    return pages;
}

template <class T>
std::vector<std::vector<T>> transpose_table(const std::vector<std::vector<T>>& t)
{
    if (t.empty())
        return {};
    std::vector<std::vector<T>> out(t[0].size(), std::vector<T>(t.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t[i].size(); ++j)
            out[j][i] = t[i][j];
    return out;
}

} // namespace

std::vector<SSPage> spectral_pages(const DoubleComplex& d, Filtration f, std::size_t r_max)
{
    if (f == Filtration::Columns) {
        auto pages = column_pages(d, r_max);
        for (auto& p : pages)
            p.filtration = f;
        return pages;
    }
    auto pages = column_pages(d.transposed(), r_max);
    for (auto& p : pages) {
        p.filtration = f;
        std::swap(p.P, p.Q);
        p.dims = transpose_table(p.dims);
        p.ranks = transpose_table(p.ranks);
        p.reliable = transpose_table(p.reliable);
        p.cycles = transpose_table(p.cycles);
        p.boundaries = transpose_table(p.boundaries);
    }
    return pages;
}

std::size_t limit_page_index(const DoubleComplex& d)
{
    return std::max(d.P, d.Q) + 2;
}

std::size_t stable_from(const std::vector<SSPage>& pages)
{
    std::size_t from = pages.empty() ? 0 : pages.size() - 1;
    while (from > 0 && pages[from - 1].dims == pages.back().dims)
        --from;
    return from;
}

std::vector<std::size_t> diagonal_sums(const SSPage& page)
{
    std::vector<std::size_t> sums(page.P + page.Q + 1, 0);
    for (std::size_t p = 0; p <= page.P; ++p)
        for (std::size_t q = 0; q <= page.Q; ++q)
            sums[p + q] += page.dims[p][q];
    return sums;
}

} // namespace hmcl

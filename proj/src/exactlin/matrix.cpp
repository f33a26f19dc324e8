#include "hmcl/exactlin/matrix.hpp"

#include "hmcl/error.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace hmcl {

namespace {

void require_same_field(const Field& a, const Field& b)
{
    if (!(a == b))
        throw PreconditionError("mixed-field operation: " + a.name() + " vs " + b.name());
}

} // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows)
{
    if (cols > UINT32_MAX)
        throw PreconditionError("matrix too wide");
}

Matrix Matrix::identity(Field field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i].push_back({static_cast<std::uint32_t>(i), Scalar(1)});
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw PreconditionError("ragged matrix literal");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, field.from_int(rows[r][c]));
    }
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw PreconditionError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            if (sgn(rows[r][c]) != 0)
                m.data_[r].push_back({static_cast<std::uint32_t>(c), field.reduce(rows[r][c])});
    }
    return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& columns, std::size_t rows)
{
    return from_rows(field, columns, rows).transpose();
}

Matrix Matrix::diagonal_block(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field_, b.field_);
    Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        m.data_[r] = a.data_[r];
    for (std::size_t r = 0; r < b.rows_; ++r) {
        auto& dst = m.data_[a.rows_ + r];
        for (const auto& e : b.data_[r])
            dst.push_back({static_cast<std::uint32_t>(e.col + a.cols_), e.value});
    }
    return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field_, b.field_);
    const Field& f = a.field_;
    Matrix m(f, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ra = 0; ra < a.rows_; ++ra)
        for (std::size_t rb = 0; rb < b.rows_; ++rb) {
            auto& dst = m.data_[ra * b.rows_ + rb];
            for (const auto& ea : a.data_[ra])
                for (const auto& eb : b.data_[rb])
                    dst.push_back({static_cast<std::uint32_t>(ea.col * b.cols_ + eb.col), f.mul(ea.value, eb.value)});
        }
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    require_same_field(top.field_, bottom.field_);
    if (top.cols_ != bottom.cols_)
        throw PreconditionError("vstack: column mismatch");
    Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(top.rows_));
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right)
{
    require_same_field(left.field_, right.field_);
    if (left.rows_ != right.rows_)
        throw PreconditionError("hstack: row mismatch");
    Matrix m(left.field_, left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        m.data_[r] = left.data_[r];
        for (const auto& e : right.data_[r])
            m.data_[r].push_back({static_cast<std::uint32_t>(e.col + left.cols_), e.value});
    }
    return m;
}

std::size_t Matrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

void Matrix::check_index(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw PreconditionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const
{
    check_index(r, c);
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it != row.end() && it->col == c)
        return it->value;
    return Scalar(0);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v)
{
    check_index(r, c);
    Scalar value = field_.reduce(v);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
    bool present = it != row.end() && it->col == c;
    if (sgn(value) == 0) {
        if (present)
            row.erase(it);
    } else if (present) {
        it->value = value;
    } else {
        row.insert(it, Entry{static_cast<std::uint32_t>(c), value});
    }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v)
{
    set(r, c, field_.add(at(r, c), field_.reduce(v)));
}

Vector Matrix::row_vector(std::size_t r) const
{
    Vector v(cols_);
    for (const auto& e : data_.at(r))
        v[e.col] = e.value;
    return v;
}

Vector Matrix::column_vector(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, SparseRow entries)
{
    if (r >= rows_)
        throw PreconditionError("set_row: row out of range");
    data_[r] = std::move(entries);
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& e : data_[r])
            t.data_[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    require_same_field(field_, rhs.field_);
    if (cols_ != rhs.rows_)
        throw PreconditionError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                std::to_string(rhs.cols_));
    Matrix out(field_, rows_, rhs.cols_);
    Vector acc(rhs.cols_);
    std::vector<std::uint32_t> touched;
    std::vector<char> mark(rhs.cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (const auto& e : data_[r]) {
            for (const auto& f : rhs.data_[e.col]) {
                if (!mark[f.col]) {
                    mark[f.col] = 1;
                    touched.push_back(f.col);
                    acc[f.col] = 0;
                }
                acc[f.col] = field_.add(acc[f.col], field_.mul(e.value, f.value));
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& dst = out.data_[r];
        for (auto c : touched) {
            mark[c] = 0;
            if (sgn(acc[c]) != 0)
                dst.push_back({c, acc[c]});
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    require_same_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix sum shape mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const auto& a = data_[r];
        const auto& b = rhs.data_[r];
        auto& dst = out.data_[r];
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
                dst.push_back(a[i++]);
            } else if (i == a.size() || b[j].col < a[i].col) {
                dst.push_back(b[j++]);
            } else {
                Scalar s = field_.add(a[i].value, b[j].value);
                if (sgn(s) != 0)
                    dst.push_back({a[i].col, s});
                ++i;
                ++j;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    return *this + rhs.scaled(field_.neg(field_.one()));
}

Matrix Matrix::scaled(const Scalar& s) const
{
    Scalar k = field_.reduce(s);
    Matrix out(field_, rows_, cols_);
    if (sgn(k) == 0)
        return out;
    for (std::size_t r = 0; r < rows_; ++r) {
        out.data_[r].reserve(data_[r].size());
        for (const auto& e : data_[r])
            out.data_[r].push_back({e.col, field_.mul(k, e.value)});
    }
    return out;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw PreconditionError("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Scalar acc = 0;
        for (const auto& e : data_[r])
            if (sgn(v[e.col]) != 0)
                acc = field_.add(acc, field_.mul(e.value, v[e.col]));
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const
{
    Matrix out(field_, indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        out.data_[i] = data_.at(indices[i]);
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& indices) const
{
    std::vector<std::int64_t> position(cols_, -1);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= cols_)
            throw PreconditionError("select_cols: index out of range");
        position[indices[i]] = static_cast<std::int64_t>(i);
    }
    bool sorted = std::is_sorted(indices.begin(), indices.end());
    Matrix out(field_, rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        auto& dst = out.data_[r];
        for (const auto& e : data_[r])
            if (position[e.col] >= 0)
                dst.push_back({static_cast<std::uint32_t>(position[e.col]), e.value});
        if (!sorted)
            std::sort(dst.begin(), dst.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
    }
    return out;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const SparseRow& r) { return r.empty(); });
}

bool operator==(const Matrix& a, const Matrix& b)
{
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (std::size_t r = 0; r < a.rows_; ++r) {
        const auto& x = a.data_[r];
        const auto& y = b.data_[r];
        if (x.size() != y.size())
            return false;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i].col != y[i].col || x[i].value != y[i].value)
                return false;
    }
    return true;
}

MatrixBuilder::MatrixBuilder(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), pending_(rows)
{
}

void MatrixBuilder::add(std::size_t r, std::size_t c, const Scalar& v)
{
    if (r >= rows_ || c >= cols_)
        throw PreconditionError("MatrixBuilder: index out of range");
    if (sgn(v) != 0)
        pending_[r].emplace_back(static_cast<std::uint32_t>(c), v);
}

Matrix MatrixBuilder::build() &&
{
    Matrix m(field_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto& items = pending_[r];
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        SparseRow row;
        for (std::size_t i = 0; i < items.size();) {
            std::uint32_t c = items[i].first;
            Scalar acc = 0;
            for (; i < items.size() && items[i].first == c; ++i)
                acc = field_.add(acc, field_.reduce(items[i].second));
            if (sgn(acc) != 0)
                row.push_back({c, acc});
        }
        m.set_row(r, std::move(row));
        items = {};
    }
    return m;
}

// ---------------------------------------------------------------------------
// Elimination kernel. Rows are reduced one at a time against the pivot rows
// found so far; the working row is a dense accumulator visited in ascending
// column order through a min-heap, so cost tracks fill-in rather than width.

namespace {

struct RationalOps {
    using T = mpq_class;
    T load(const Scalar& s) const { return s; }
    Scalar store(const T& t) const { return t; }
    bool is_zero(const T& t) const { return sgn(t) == 0; }
    T inv(const T& t) const { return 1 / t; }
    T mul(const T& a, const T& b) const { return a * b; }
    // y -= a * x
    void sub_mul(T& y, const T& a, const T& x) const { y -= a * x; }
};

struct ModOps {
    using T = std::uint64_t;
    std::uint64_t p;
    T load(const Scalar& s) const { return s.get_num().get_ui(); }
    Scalar store(const T& t) const { return Scalar(static_cast<unsigned long>(t)); }
    bool is_zero(const T& t) const { return t == 0; }
    T mul(const T& a, const T& b) const { return (a * b) % p; }
    T inv(const T& a) const
    {
        // a^(p-2)
        T result = 1, base = a % p;
        std::uint64_t e = p - 2;
        while (e) {
            if (e & 1)
                result = (result * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return result;
    }
    void sub_mul(T& y, const T& a, const T& x) const
    {
        T prod = (a * x) % p;
        y = y >= prod ? y - prod : y + p - prod;
    }
};

template <class Ops>
using RowT = std::vector<std::pair<std::uint32_t, typename Ops::T>>;

template <class Ops>
class Eliminator {
public:
    using T = typename Ops::T;

    Eliminator(Ops ops, std::size_t cols) : ops_(ops), cols_(cols), pivot_row_(cols, -1), work_(cols), live_(cols, 0) {}

    // Reduces `row` against the current pivots; when a nonzero remainder is
    // left it becomes a new pivot row (normalized to leading one).
    bool insert(const SparseRow& row)
    {
        std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
        std::vector<std::uint32_t> touched;
        auto touch = [&](std::uint32_t c) {
            if (!live_[c]) {
                live_[c] = 1;
                work_[c] = T{};
                heap.push(c);
                touched.push_back(c);
            }
        };
        for (const auto& e : row) {
            touch(e.col);
            work_[e.col] = ops_.load(e.value);
        }
        RowT<Ops> remainder;
        while (!heap.empty()) {
            std::uint32_t c = heap.top();
            heap.pop();
            if (ops_.is_zero(work_[c]))
                continue;
            std::int64_t pr = pivot_row_[c];
            if (pr < 0) {
                remainder.emplace_back(c, work_[c]);
                continue;
            }
            T factor = work_[c];
            for (const auto& [col, val] : basis_[static_cast<std::size_t>(pr)]) {
                touch(col);
                ops_.sub_mul(work_[col], factor, val);
            }
        }
        for (auto c : touched)
            live_[c] = 0;
        if (remainder.empty())
            return false;
        T scale = ops_.inv(remainder.front().second);
        for (auto& item : remainder)
            item.second = ops_.mul(item.second, scale);
        pivot_row_[remainder.front().first] = static_cast<std::int64_t>(basis_.size());
        basis_.push_back(std::move(remainder));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }

    // Back-substitution to reduced echelon form, rows sorted by pivot.
    EchelonForm finish(const Field& field)
    {
        std::vector<std::size_t> order(basis_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return basis_[a].front().first < basis_[b].front().first; });
        // Reduce from the last pivot upward; rows with larger pivots are
        // already free of every other pivot column.
        for (std::size_t k = order.size(); k-- > 0;) {
            auto& row = basis_[order[k]];
            bool needs = false;
            for (std::size_t i = 1; i < row.size(); ++i)
                if (pivot_row_[row[i].first] >= 0) {
                    needs = true;
                    break;
                }
            if (!needs)
                continue;
            std::uint32_t lead = row.front().first;
            std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
            std::vector<std::uint32_t> touched;
            auto touch = [&](std::uint32_t c) {
                if (!live_[c]) {
                    live_[c] = 1;
                    work_[c] = T{};
                    heap.push(c);
                    touched.push_back(c);
                }
            };
            for (const auto& [c, v] : row) {
                touch(c);
                work_[c] = v;
            }
            RowT<Ops> reduced;
            while (!heap.empty()) {
                std::uint32_t c = heap.top();
                heap.pop();
                if (ops_.is_zero(work_[c]))
                    continue;
                std::int64_t pr = pivot_row_[c];
                if (c == lead || pr < 0) {
                    reduced.emplace_back(c, work_[c]);
                    continue;
                }
                T factor = work_[c];
                for (const auto& [col, val] : basis_[static_cast<std::size_t>(pr)]) {
                    touch(col);
                    ops_.sub_mul(work_[col], factor, val);
                }
            }
            for (auto c : touched)
                live_[c] = 0;
            row = std::move(reduced);
        }
        EchelonForm out;
        out.rows = Matrix(field, basis_.size(), cols_);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto& row = basis_[order[i]];
            out.pivots.push_back(row.front().first);
            SparseRow sr;
            sr.reserve(row.size());
            for (const auto& [c, v] : row)
                sr.push_back({c, ops_.store(v)});
            out.rows.set_row(i, std::move(sr));
        }
        return out;
    }

private:
    Ops ops_;
    std::size_t cols_;
    std::vector<std::int64_t> pivot_row_;
    std::vector<RowT<Ops>> basis_;
    std::vector<T> work_;
    std::vector<char> live_;
};

template <class Ops>
EchelonForm echelon_with(const Matrix& m, Ops ops)
{
    Eliminator<Ops> el(ops, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        el.insert(m.row(r));
    return el.finish(m.field());
}

template <class Ops>
std::size_t rank_with(const Matrix& m, Ops ops)
{
    Eliminator<Ops> el(ops, m.cols());
    for (std::size_t r = 0; r < m.rows() && el.rank() < m.cols(); ++r)
        el.insert(m.row(r));
    return el.rank();
}

} // namespace

EchelonForm row_echelon(const Matrix& m)
{
    if (m.field().is_rationals())
        return echelon_with(m, RationalOps{});
    return echelon_with(m, ModOps{m.field().characteristic()});
}

std::size_t rank(const Matrix& m)
{
    // Fewer, longer rows keep the pivot set (and fill-in) small.
    if (m.rows() > m.cols())
        return rank(m.transpose());
    if (m.field().is_rationals())
        return rank_with(m, RationalOps{});
    return rank_with(m, ModOps{m.field().characteristic()});
}

std::optional<Matrix> solve_many(const Matrix& m, const Matrix& rhs)
{
    if (m.rows() != rhs.rows())
        throw PreconditionError("solve: row mismatch");
    const Field& f = m.field();
    EchelonForm ef = row_echelon(Matrix::hstack(m, rhs));
    Matrix x(f, m.cols(), rhs.cols());
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
        std::size_t p = ef.pivots[i];
        if (p >= m.cols())
            return std::nullopt;
        SparseRow sr;
        for (const auto& e : ef.rows.row(i))
            if (e.col >= m.cols())
                sr.push_back({static_cast<std::uint32_t>(e.col - m.cols()), e.value});
        x.set_row(p, std::move(sr));
    }
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    auto x = solve_many(m, Matrix::from_columns(m.field(), {b}, m.rows()));
    if (!x)
        return std::nullopt;
    return x->column_vector(0);
}

Vector zero_vector(std::size_t n)
{
    return Vector(n);
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

} // namespace hmcl

#include "hmcl/exactlin/smith.hpp"

#include "hmcl/error.hpp"

#include <algorithm>
#include <utility>

namespace hmcl {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw PreconditionError("ragged integer matrix literal");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m.at(r, a), m.at(r, b));
}

} // namespace

SmithForm smith_normal_form(IntMatrix m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (m.at(r, c) != 0 && (!found || abs(m.at(r, c)) < abs(m.at(pr, pc)))) {
                    found = true;
                    pr = r;
                    pc = c;
                }
        if (!found)
            break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        bool clean = true;
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (m.at(r, t) == 0)
                continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(r, t).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (std::size_t c = t; c < cols; ++c)
                m.at(r, c) -= q * m.at(t, c);
            if (m.at(r, t) != 0)
                clean = false;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (m.at(t, c) == 0)
                continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(t, c).get_mpz_t(), m.at(t, t).get_mpz_t());
            for (std::size_t r = t; r < rows; ++r)
                m.at(r, c) -= q * m.at(r, t);
            if (m.at(t, c) != 0)
                clean = false;
        }
        if (!clean)
            continue; // a smaller remainder appeared; pick a new pivot

        // The pivot must divide the rest of the block; otherwise fold the
        // offending row into row t and retry.
        bool divides = true;
        for (std::size_t r = t + 1; r < rows && divides; ++r)
            for (std::size_t c = t + 1; c < cols; ++c)
                if (!mpz_divisible_p(m.at(r, c).get_mpz_t(), m.at(t, t).get_mpz_t())) {
                    for (std::size_t k = t; k < cols; ++k)
                        m.at(t, k) += m.at(r, k);
                    divides = false;
                    break;
                }
        if (!divides)
            continue;
        ++t;
    }
    SmithForm out;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i)
        if (m.at(i, i) != 0)
            out.invariant_factors.push_back(abs(m.at(i, i)));
    out.free_rank = cols - out.invariant_factors.size();
    return out;
}

mpz_class determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw PreconditionError("determinant of a non-square matrix");
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    const std::size_t n = a.rows();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            swap_rows(a, k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), a.at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    if (n == 0)
        return 1;
    return sign * a.at(n - 1, n - 1);
}

} // namespace hmcl

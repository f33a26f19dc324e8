#include "hmcl/spectral/group_homology.hpp"

#include "hmcl/error.hpp"

namespace hmcl {

namespace {

std::size_t power(std::size_t base, std::size_t e)
{
    std::size_t r = 1;
    while (e--)
        r *= base;
    return r;
}

// Digits of a base-n number, most significant first.
std::vector<std::size_t> digits(std::size_t index, std::size_t n, std::size_t length)
{
    std::vector<std::size_t> d(length);
    for (std::size_t i = length; i-- > 0;) {
        d[i] = index % n;
        index /= n;
    }
    return d;
}

std::size_t number(const std::vector<std::size_t>& d, std::size_t n)
{
    std::size_t r = 0;
    for (auto x : d)
        r = r * n + x;
    return r;
}

// Tuple with positions i, i+1 multiplied together.
std::vector<std::size_t> merge(const FiniteGroup& g, const std::vector<std::size_t>& t, std::size_t i)
{
    std::vector<std::size_t> out(t.begin(), t.begin() + i);
    out.push_back(g.mul(t[i], t[i + 1]));
    out.insert(out.end(), t.begin() + i + 2, t.end());
    return out;
}

Scalar sign(const Field& f, std::size_t k)
{
    return f.from_int(k % 2 ? -1 : 1);
}

// Adds v * block at (row block, col block) of width dim.
void add_block(MatrixBuilder& b, std::size_t row, std::size_t col, const Matrix& block, const Scalar& v,
               const Field& f)
{
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (const auto& e : block.row(r))
            b.add(row * block.rows() + r, col * block.cols() + e.col, f.mul(v, e.value));
}

} // namespace

BarResolution bar_resolution(GroupPtr g, const Field& f, std::size_t p_max)
{
    if (p_max < 1)
        throw PreconditionError("bar_resolution needs p_max >= 1");
    const FiniteGroup& G = *g;
    const std::size_t n = G.order();
    BarResolution out{g, {Direction::Chain, f, {}, {}, {}}, {}, Matrix(f, 1, n), false};
    for (std::size_t p = 0; p <= p_max; ++p) {
        const std::size_t dim = power(n, p + 1);
        out.complex.dims.push_back(dim);
        KGModule m{g, dim, {}};
        for (std::size_t s = 0; s < n; ++s) {
            Matrix a(f, dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                auto t = digits(i, n, p + 1);
                t[0] = G.mul(s, t[0]);
                a.set(number(t, n), i, 1);
            }
            m.action.push_back(std::move(a));
        }
        out.modules.push_back(std::move(m));
        if (p == 0) {
            out.complex.differentials.push_back(Matrix(f, 0, dim));
            continue;
        }
        MatrixBuilder b(f, power(n, p), dim);
        for (std::size_t i = 0; i < dim; ++i) {
            auto t = digits(i, n, p + 1);
            // g_0 g_1 [g_2 | ...]
            b.add(number(merge(G, t, 0), n), i, 1);
            for (std::size_t k = 1; k < p; ++k)
                b.add(number(merge(G, t, k), n), i, sign(f, k));
            std::vector<std::size_t> last(t.begin(), t.end() - 1);
            b.add(number(last, n), i, sign(f, p));
        }
        out.complex.differentials.push_back(std::move(b).build());
    }
    for (std::size_t i = 0; i < n; ++i)
        out.augmentation.set(0, i, 1);
    out.complex.validate();
    for (std::size_t p = 1; p <= p_max; ++p)
        for (std::size_t s = 0; s < n; ++s)
            if (out.complex.differentials[p] * out.modules[p].action[s] !=
                out.modules[p - 1].action[s] * out.complex.differentials[p])
                throw InvariantError("bar differential is not G-linear");

    // Exactness by ranks: rank eps = 1, dim P_0 = 1 + rank d_1, and
    // dim P_p = rank d_p + rank d_{p+1}.
    std::vector<std::size_t> ranks(p_max + 1);
    for (std::size_t p = 1; p <= p_max; ++p)
        ranks[p] = rank(out.complex.differentials[p]);
    bool exact = rank(out.augmentation) == 1 && (out.augmentation * out.complex.differentials[1]).is_zero() &&
                 out.complex.dims[0] == 1 + ranks[1];
    for (std::size_t p = 1; p < p_max; ++p)
        exact = exact && out.complex.dims[p] == ranks[p] + ranks[p + 1];
    out.exact = exact;
    return out;
}

BasedComplex group_chain_complex(const KGModule& x, std::size_t p_max)
{
    const FiniteGroup& G = *x.group;
    const Field f = x.action.at(0).field();
    const std::size_t n = G.order();
    BasedComplex c{Direction::Chain, f, {}, {}, {}};
    const Matrix id = Matrix::identity(f, x.dim);
    for (std::size_t p = 0; p <= p_max; ++p) {
        const std::size_t tuples = power(n, p);
        c.dims.push_back(tuples * x.dim);
        if (p == 0) {
            c.differentials.push_back(Matrix(f, 0, x.dim));
            continue;
        }
        MatrixBuilder b(f, power(n, p - 1) * x.dim, tuples * x.dim);
        for (std::size_t i = 0; i < tuples; ++i) {
            auto t = digits(i, n, p);
            std::vector<std::size_t> rest(t.begin() + 1, t.end());
            add_block(b, number(rest, n), i, x.action[G.inverse(t[0])], Scalar(1), f);
            for (std::size_t k = 1; k < p; ++k)
                add_block(b, number(merge(G, t, k - 1), n), i, id, sign(f, k), f);
            std::vector<std::size_t> last(t.begin(), t.end() - 1);
            add_block(b, number(last, n), i, id, sign(f, p), f);
        }
        c.differentials.push_back(std::move(b).build());
    }
    c.validate();
    return c;
}

BasedComplex group_cochain_complex(const KGModule& x, std::size_t p_max)
{
    const FiniteGroup& G = *x.group;
    const Field f = x.action.at(0).field();
    const std::size_t n = G.order();
    BasedComplex c{Direction::Cochain, f, {}, {}, {}};
    const Matrix id = Matrix::identity(f, x.dim);
    for (std::size_t p = 0; p <= p_max; ++p)
        c.dims.push_back(power(n, p) * x.dim);
    for (std::size_t p = 0; p < p_max; ++p) {
        const std::size_t tuples = power(n, p + 1);
        MatrixBuilder b(f, tuples * x.dim, power(n, p) * x.dim);
        for (std::size_t i = 0; i < tuples; ++i) {
            auto t = digits(i, n, p + 1);
            std::vector<std::size_t> rest(t.begin() + 1, t.end());
            add_block(b, i, number(rest, n), x.action[t[0]], Scalar(1), f);
            for (std::size_t k = 1; k <= p; ++k)
                add_block(b, i, number(merge(G, t, k - 1), n), id, sign(f, k), f);
            std::vector<std::size_t> first(t.begin(), t.end() - 1);
            add_block(b, i, number(first, n), id, sign(f, p + 1), f);
        }
        c.differentials.push_back(std::move(b).build());
    }
    c.validate();
    return c;
}

std::vector<std::size_t> group_homology(const KGModule& x, std::size_t p_max)
{
    return homology(group_chain_complex(x, p_max + 1)).dims();
}

std::vector<std::size_t> group_cohomology(const KGModule& x, std::size_t p_max)
{
    return homology(group_cochain_complex(x, p_max + 1)).dims();
}

} // namespace hmcl

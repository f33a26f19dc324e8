#include <doctest.h>

#include "hmcl/error.hpp"
#include "hmcl/exactlin/field.hpp"
#include "hmcl/exactlin/matrix.hpp"
#include "hmcl/exactlin/smith.hpp"
#include "hmcl/exactlin/subspace.hpp"

#include <random>
#include <set>

using namespace hmcl;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t rows, std::size_t cols, int sparsity)
{
    std::uniform_int_distribution<int> val(-3, 3), keep(0, sparsity);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep(rng) == 0)
                m.set(r, c, f.from_int(val(rng)));
    return m;
}

// Brute force over GF(2): the image of m has 2^rank elements.
std::size_t brute_rank_gf2(const Matrix& m)
{
    std::set<std::vector<int>> image;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m.cols()); ++mask) {
        std::vector<int> out(m.rows(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if ((mask >> c) & 1)
                    out[r] ^= static_cast<int>(m.at(r, c).get_num().get_si());
        image.insert(out);
    }
    std::size_t r = 0;
    while ((std::size_t(1) << r) < image.size())
        ++r;
    return r;
}

} // namespace

TEST_CASE("field arithmetic is canonical")
{
    CHECK(Q.characteristic() == 0);
    CHECK(F3.characteristic() == 3);
    CHECK(F3.reduce(mpq_class(-1)) == 2);
    CHECK(F3.reduce(mpq_class(1, 2)) == 2); // 2 * 2 = 4 = 1
    CHECK(Q.parse("6/4") == mpq_class(3, 2));
    CHECK(F3.inv(F3.from_int(2)) == 2);
    CHECK_THROWS_AS(Field::prime(4), InputError);
    CHECK_THROWS_AS(Field::prime(std::uint64_t(1) << 31), InputError);
    CHECK_THROWS_AS(F3.reduce(mpq_class(1, 3)), PreconditionError);
    CHECK_THROWS_AS(Q.parse("x"), InputError);
}

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix(Q, 0, 0)) == 0);
    CHECK(rank(Matrix::identity(Q, 3)) == 3);
    CHECK(rank(Matrix::from_rows(F2, {{2, 4}, {1, 2}})) == 1);
    CHECK(rank(Matrix::from_rows(Q, {{2, 4}, {1, 3}})) == 2);
    CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(F3, 2), PreconditionError);
}

TEST_CASE("kernel and image examples")
{
    CHECK(kernel_basis(Matrix(Q, 2, 3)).dim() == 3);
    CHECK(kernel_basis(Matrix::identity(Q, 2)).dim() == 0);

    Subspace k = kernel_basis(Matrix::from_rows(Q, {{1, 1}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.basis() == Matrix::from_rows(Q, {{1, -1}}));

    CHECK(image_basis(Matrix(Q, 2, 2)).dim() == 0);
    CHECK(image_basis(Matrix::identity(Q, 4)) == Subspace::full(Q, 4));
    Subspace im = image_basis(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
    REQUIRE(im.dim() == 1);
    CHECK(im.basis() == Matrix::from_rows(Q, {{1, 2}}));
}

TEST_CASE("subspace operations")
{
    Subspace e1 = Subspace::coordinate(Q, 2, {0});
    Subspace e2 = Subspace::coordinate(Q, 2, {1});
    auto same = subspace_ops(e1, e1);
    CHECK(same.intersection == e1);
    CHECK(same.quotient_dim == 0);
    CHECK(same.contains);

    auto apart = subspace_ops(e1, e2);
    CHECK(apart.sum.dim() == 2);
    CHECK(apart.intersection.dim() == 0);
    CHECK_FALSE(apart.contains);

    Subspace a(Matrix::from_rows(Q, {{1, 1, 0}, {1, 0, 0}}));
    Subspace b = Subspace::coordinate(Q, 3, {1});
    CHECK(intersection(a, b) == b);
    CHECK(quotient_dim(a, b) == 1);

    CHECK_THROWS_AS(subspace_sum(e1, Subspace::full(Q, 3)), PreconditionError);
}

TEST_CASE("preimage examples")
{
    Matrix m = Matrix::from_rows(Q, {{1, 0}, {0, 0}});
    CHECK(preimage(m, Subspace::full(Q, 2)) == Subspace::full(Q, 2));
    CHECK(preimage(m, Subspace::zero(Q, 2)) == kernel_basis(m));
    CHECK(preimage(m, Subspace::coordinate(Q, 2, {0})) == Subspace::full(Q, 2));
    CHECK_THROWS_AS(preimage(m, Subspace::full(Q, 3)), PreconditionError);
}

TEST_CASE("smith normal form examples")
{
    auto one = smith_normal_form(IntMatrix::from_rows({{2}}));
    CHECK(one.invariant_factors == std::vector<mpz_class>{2});
    CHECK(one.free_rank == 0);

    auto zero = smith_normal_form(IntMatrix(1, 2));
    CHECK(zero.invariant_factors.empty());
    CHECK(zero.free_rank == 2);

    auto diag = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(diag.invariant_factors == std::vector<mpz_class>{1, 6});
}

TEST_CASE("solve and quotient maps")
{
    Matrix a = Matrix::from_rows(Q, {{1, 2}, {3, 4}, {5, 6}});
    Vector b{mpq_class(5), mpq_class(11), mpq_class(17)};
    auto x = solve(a, b);
    REQUIRE(x);
    CHECK(a.apply(*x) == b);
    CHECK_FALSE(solve(a, Vector{1, 0, 0}));

    Subspace k(Matrix::from_rows(Q, {{1, 1, 0}}));
    QuotientMap q(k);
    CHECK(q.dim() == 2);
    CHECK(is_zero(q.project(Vector{1, 1, 0})));
    CHECK(q.matrix() * q.section() == Matrix::identity(Q, 2));
}

TEST_CASE("property: rank-nullity on random matrices")
{
    std::mt19937 rng(20240611);
    for (const Field& f : {Q, F2, F3, Field::prime(101)})
        for (int trial = 0; trial < 40; ++trial) {
            Matrix m = random_matrix(rng, f, 6, 6, trial % 3);
            Subspace k = kernel_basis(m);
            CHECK(k.dim() + rank(m) == 6);
            CHECK(rank(m) == rank(m.transpose()));
            CHECK((m * k.basis().transpose()).is_zero());
            CHECK(image_basis(m).dim() == rank(m));
        }
}

TEST_CASE("property: GF(2) rank agrees with image enumeration")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, F2, 5, 7, 1);
        CHECK(rank(m) == brute_rank_gf2(m));
    }
}

TEST_CASE("property: canonical subspaces")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const Field& f = trial % 2 ? Q : F3;
        Subspace a(random_matrix(rng, f, 3, 6, 1));
        Subspace b(random_matrix(rng, f, 4, 6, 1));
        CHECK(Subspace(a.basis()) == a);
        CHECK(subspace_sum(a, b).dim() + intersection(a, b).dim() == a.dim() + b.dim());
        CHECK(a.contains(intersection(a, b)));
        CHECK(b.contains(intersection(a, b)));
        Matrix m = random_matrix(rng, f, 6, 6, 1);
        Subspace pre = preimage(m, a);
        CHECK(pre.contains(kernel_basis(m)));
        CHECK(a.contains(map_subspace(m, pre)));
    }
}

TEST_CASE("property: smith normal form divisibility and determinant")
{
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> val(-9, 9);
    int nonsingular = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        IntMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = val(rng);
        SmithForm s = smith_normal_form(m);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(mpz_divisible_p(s.invariant_factors[i + 1].get_mpz_t(), s.invariant_factors[i].get_mpz_t()));
        for (const auto& d : s.invariant_factors)
            CHECK(d > 0);
        mpz_class det = determinant(m);
        if (det != 0) {
            ++nonsingular;
            mpz_class prod = 1;
            for (const auto& d : s.invariant_factors)
                prod *= d;
            CHECK(prod == abs(det));
            CHECK(s.free_rank == 0);
        }
    }
    CHECK(nonsingular > 30);
}

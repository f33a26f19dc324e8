#include <doctest.h>

#include "hmcl/error.hpp"
#include "hmcl/hochmitch/hochschild.hpp"
#include "hmcl/lincat/algebra.hpp"
#include "support/fixtures.hpp"
#include "support/random_quiver.hpp"

using namespace hmcl;

namespace {

const Field Q = Field::rationals();

CategoryPtr cat(const QuiverPresentation& q, const Field& f = Q)
{
    return share(from_presentation(q, f));
}

std::vector<QuiverPresentation> small_fixtures()
{
    return {fixtures::point(),   fixtures::kronecker(), fixtures::crown(),     fixtures::a3_zero(),
            fixtures::a3(),      fixtures::loop(3),     fixtures::two_cycle(3), fixtures::square()};
}

std::vector<std::size_t> oracle_cohomology(const CategoryPtr& c, const Bimodule& m, std::size_t top)
{
    return homology(algebra_hochschild_cochain(flatten_to_algebra(*c), m, top + 1)).dims();
}

} // namespace

TEST_CASE("nerves")
{
    auto k = cat(fixtures::point());
    for (std::size_t n = 0; n < 4; ++n)
        CHECK(nerve_dim(*k, n) == 1);
    auto kr = cat(fixtures::kronecker());
    CHECK(nerve_dim(*kr, 0) == 2);
    CHECK(nerve_dim(*kr, 1) == 4);
    auto cr = cat(fixtures::crown());
    CHECK(nerve_dim(*cr, 1) == 8);
    // Sequences use at most one arrow: 4 all-identity chains plus 4 arrows in 2 positions.
    CHECK(nerve_dim(*cr, 2) == 12);
}

TEST_CASE("chain complexes")
{
    auto k = standard(cat(fixtures::point()));
    auto kc = chain_complex(k, 3).complex;
    CHECK(kc.dims == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(homology(kc).dims() == std::vector<std::size_t>{1, 0, 0});

    auto kr = cat(fixtures::kronecker());
    auto b = standard(kr);
    auto bc = chain_complex(b, 2);
    CHECK(bc.complex.dims[0] == 2);
    // Oracle: C_1 = sum over (x1, x2) of dim M(x1, x2) * dim hom(x2, x1).
    std::size_t c1 = 0;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t z = 0; z < 2; ++z)
            c1 += b.dim(a, z) * kr->hom_dim(z, a);
    CHECK(bc.complex.dims[1] == c1);
    CHECK(bc.complex.labels[0] == std::vector<std::string>{"(1_x; x)", "(1_y; y)"});

    auto zero = chain_complex(Bimodule::zero(kr), 3).complex;
    for (auto d : zero.dims)
        CHECK(d == 0);
    CHECK(homology(zero).dims() == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("cochain complexes and the known first cohomology")
{
    CHECK(hochschild_cohomology_dims(standard(cat(fixtures::point())), 2) == std::vector<std::size_t>{1, 0, 0});
    auto kr = hochschild_cohomology_dims(standard(cat(fixtures::kronecker())), 2);
    CHECK(kr[0] == 1);
    CHECK(kr[1] == 3);
    CHECK(kr[2] == 0);
    CHECK(hochschild_cohomology_dims(standard(cat(fixtures::crown())), 1)[1] == 1);
    for (const Field& f : {Field::prime(2), Field::prime(3)}) {
        CHECK(hochschild_cohomology_dims(standard(cat(fixtures::kronecker(), f)), 1)[1] == 3);
        CHECK(hochschild_cohomology_dims(standard(cat(fixtures::crown(), f)), 1)[1] == 1);
    }
}

TEST_CASE("homology of small explicit complexes")
{
    BasedComplex zero{Direction::Chain, Q, {0, 0}, {}, {Matrix(Q, 0, 0), Matrix(Q, 0, 0)}};
    CHECK(homology(zero).dims() == std::vector<std::size_t>{0});

    BasedComplex id{Direction::Chain, Q, {1, 1, 0}, {}, {Matrix(Q, 0, 1), Matrix::identity(Q, 1), Matrix(Q, 1, 0)}};
    CHECK_NOTHROW(id.validate());
    CHECK(homology(id).dims() == std::vector<std::size_t>{0, 0});

    BasedComplex bad{Direction::Cochain, Q, {1, 1, 1}, {}, {Matrix::identity(Q, 1), Matrix::identity(Q, 1)}};
    CHECK_THROWS_AS(bad.validate(), InvariantError);

    auto kc = cochain_complex(standard(cat(fixtures::kronecker())), 2).complex;
    auto h1 = degree_homology(kc, 1);
    CHECK(h1.dim == 3);
    for (std::size_t r = 0; r < h1.dim; ++r) {
        Vector e(h1.dim);
        e[r] = 1;
        CHECK(h1.class_of(h1.representatives.row_vector(r)) == e);
    }
    CHECK_THROWS_AS(degree_homology(kc, 2), PreconditionError);
}

TEST_CASE("center")
{
    CHECK(center(*cat(fixtures::point())).dim == 1);
    CHECK(center(*cat(fixtures::kronecker())).dim == 1);
    auto pt = from_presentation(fixtures::point(), Q);
    CHECK(center(disjoint_union(pt, pt)).dim == 2);
}

TEST_CASE("property: center equals degree-zero cohomology")
{
    for (const auto& q : small_fixtures()) {
        auto c = cat(q);
        CHECK(center(*c).dim == hochschild_cohomology_dims(standard(c), 0)[0]);
    }
    std::mt19937 rng(8);
    for (int trial = 0; trial < 15; ++trial) {
        auto c = cat(fixtures::random_quiver(rng).q, Field::prime(2));
        CHECK(center(*c).dim == hochschild_cohomology_dims(standard(c), 0)[0]);
    }
}

TEST_CASE("property: category cohomology agrees with the algebra oracle")
{
    for (const Field& f : {Q, Field::prime(2), Field::prime(3)})
        for (const auto& q : small_fixtures()) {
            auto c = cat(q, f);
            REQUIRE(c->total_dim() <= 10);
            auto m = standard(c);
            CAPTURE(q.vertices.size());
            CHECK(hochschild_cohomology_dims(m, 2) == oracle_cohomology(c, m, 2));
        }
    // Non-standard coefficients: the dual bimodule.
    for (const auto& q : {fixtures::kronecker(), fixtures::a3_zero(), fixtures::loop(3)}) {
        auto c = cat(q);
        auto dm = dual(standard(c));
        CHECK(hochschild_cohomology_dims(dm, 2) == oracle_cohomology(c, dm, 2));
    }
    CHECK_THROWS_AS(algebra_hochschild_cochain(flatten_to_algebra(*cat(fixtures::square())),
                                               standard(cat(fixtures::square())), 4, 1000),
                    PreconditionError);
}

TEST_CASE("property: invariance under contraction and expansion")
{
    for (const auto& q : small_fixtures()) {
        auto c = cat(q);
        if (c->object_count() < 2)
            continue;
        auto expect = hochschild_cohomology_dims(standard(c), 2);
        auto contracted = share(contract(*c, {0, 1}));
        CHECK(hochschild_cohomology_dims(standard(contracted), 2) == expect);
        std::vector<std::size_t> all(c->object_count());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        auto one = share(contract(*c, all));
        CHECK(hochschild_cohomology_dims(standard(one), 2) == expect);
    }
}

TEST_CASE("property: homology with Y equals cohomology with DY")
{
    for (const auto& q : small_fixtures()) {
        auto c = cat(q, Field::prime(3));
        auto y = standard(c);
        CHECK(hochschild_homology_dims(y, 3) == hochschild_cohomology_dims(dual(y), 3));
    }
    auto kr = cat(fixtures::kronecker());
    auto y = tensor_bimodules(standard(kr), dual(standard(kr)));
    CHECK(hochschild_homology_dims(y, 3) == hochschild_cohomology_dims(dual(y), 3));
}

TEST_CASE("property: random categories give valid complexes")
{
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 15; ++trial) {
        auto c = cat(fixtures::random_quiver(rng).q, trial % 2 ? Q : Field::prime(7));
        auto m = standard(c);
        // Construction validates d o d = 0.
        CHECK_NOTHROW(chain_complex(m, 3));
        CHECK_NOTHROW(cochain_complex(m, 3));
        CHECK(hochschild_cohomology_dims(m, 1) == oracle_cohomology(c, m, 1));
    }
}

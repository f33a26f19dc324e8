#include <doctest.h>

#include "hmcl/bimod/bimodule.hpp"
#include "hmcl/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_quiver.hpp"

using namespace hmcl;

namespace {

const Field Q = Field::rationals();

CategoryPtr cat(const QuiverPresentation& q, const Field& f = Q)
{
    return share(from_presentation(q, f));
}

std::size_t dim(const Bimodule& m, const std::string& y, const std::string& x)
{
    return m.dim(m.base().object_index(y), m.base().object_index(x));
}

} // namespace

TEST_CASE("standard bimodules")
{
    CHECK(standard(cat(fixtures::point())).total_dim() == 1);
    auto b = standard(cat(fixtures::kronecker()));
    CHECK(dim(b, "x", "x") == 1);
    CHECK(dim(b, "y", "x") == 2);
    CHECK(dim(b, "x", "y") == 0);
    CHECK(dim(b, "y", "y") == 1);
    CHECK(standard(cat(fixtures::crown())).total_dim() == 8);
    CHECK(is_locally_finite(b));
}

TEST_CASE("duals")
{
    auto k = standard(cat(fixtures::point()));
    CHECK(dual(k).total_dim() == 1);

    auto b = standard(cat(fixtures::kronecker()));
    auto db = dual(b);
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x)
            CHECK(db.dim(y, x) == b.dim(x, y));
    CHECK(db.labels(0, 1) == std::vector<std::string>{"a*", "b*"});
    CHECK(dual(db) == b);
}

TEST_CASE("lifts along functors")
{
    auto kr = cat(fixtures::kronecker());
    auto cr = cat(fixtures::crown());
    auto b = standard(kr);
    CHECK(lift(identity_functor(kr), b) == b);

    auto lb = lift(fixtures::crown_projection(cr, kr), b);
    CHECK(dim(lb, "tx", "x") == 1);
    CHECK(dim(lb, "y", "x") == 2);
    CHECK(dim(lb, "ty", "x") == 2);
    CHECK(dim(lb, "x", "y") == 0);
    CHECK(lb.total_dim() == 16);
    CHECK(is_locally_finite(lb));

    CHECK_THROWS_AS(lift(identity_functor(cr), b), PreconditionError);
}

TEST_CASE("twists")
{
    auto kr = cat(fixtures::kronecker());
    auto cr = cat(fixtures::crown());
    auto t = fixtures::crown_swap(cr);
    auto c = standard(cr);
    CHECK(twist(c, identity_functor(cr)) == c);

    auto lb = lift(fixtures::crown_projection(cr, kr), standard(kr));
    CHECK(twist(lb, t) == lb);

    auto tc = twist(c, t);
    std::size_t x = cr->object_index("x"), y = cr->object_index("y");
    std::size_t tx = cr->object_index("tx"), ty = cr->object_index("ty");
    CHECK(tc.labels(y, x) == c.labels(ty, tx));
    CHECK(tc.labels(ty, tx) == c.labels(y, x));
    CHECK_FALSE(tc == c);
    CHECK(twist(tc, t) == c);
}

TEST_CASE("tensor products")
{
    auto k = standard(cat(fixtures::point()));
    CHECK(tensor_bimodules(k, k).total_dim() == 1);

    auto kr = cat(fixtures::kronecker());
    auto b = standard(kr);
    auto bb = tensor_bimodules(b, b);
    CHECK(dim(bb, "y", "x") == 4);
    CHECK(dim(bb, "x", "x") == 1);
    CHECK(tensor_bimodules(b, Bimodule::zero(kr)).total_dim() == 0);
    CHECK_THROWS_AS(tensor_bimodules(b, standard(cat(fixtures::crown()))), PreconditionError);
}

TEST_CASE("broken actions are rejected")
{
    auto b = standard(cat(fixtures::kronecker()));
    BimoduleData d = b.data();
    // 1_y acting on M(y, x) by 2: the unit law fails.
    auto& unit = d.left[(1 * 2 + 1) * 2 + 0];
    unit[0] = unit[0].scaled(2);
    CHECK_THROWS_AS(Bimodule{d}, InvariantError);

    auto a3 = standard(share(from_presentation(fixtures::a3(), Q)));
    BimoduleData e = a3.data();
    // Right action of a on M(3, 2) -> M(3, 1) sends b to 2 b*a; the middle law fails.
    auto& ra = e.right[(2 * 3 + 1) * 3 + 0];
    ra[0] = ra[0].scaled(2);
    CHECK_THROWS_AS(Bimodule{e}, InvariantError);
}

TEST_CASE("property: dual involution, dimension formulas, twist squares")
{
    std::mt19937 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        auto r = fixtures::random_quiver(rng);
        auto c = cat(r.q, trial % 2 ? Q : Field::prime(5));
        auto m = standard(c);
        auto mm = tensor_bimodules(m, m);
        const std::size_t n = c->object_count();
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x) {
                std::size_t expect = 0;
                for (std::size_t z = 0; z < n; ++z)
                    expect += c->hom_dim(y, z) * c->hom_dim(z, x);
                CHECK(mm.dim(y, x) == expect);
            }
        CHECK(dual(dual(m)) == m);
        CHECK(dual(dual(mm)) == mm);
        auto dm = dual(mm);
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x)
                CHECK(dm.dim(y, x) == mm.dim(x, y));
    }
    auto cr = cat(fixtures::crown(), Field::prime(3));
    auto t = fixtures::crown_swap(cr);
    auto m = tensor_bimodules(standard(cr), dual(standard(cr)));
    CHECK(twist(twist(m, t), t) == m);
}

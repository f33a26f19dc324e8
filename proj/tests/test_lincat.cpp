#include <doctest.h>

#include "hmcl/error.hpp"
#include "hmcl/lincat/algebra.hpp"
#include "hmcl/lincat/hypotheses.hpp"
#include "hmcl/lincat/presentation.hpp"
#include "support/fixtures.hpp"
#include "support/random_quiver.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace hmcl;
using fixtures::RandomQuiver;
using fixtures::random_quiver;
using fixtures::count_paths;

namespace {

const Field Q = Field::rationals();

std::size_t dim(const LinearCategory& c, const std::string& y, const std::string& x)
{
    return c.hom_dim(c.object_index(y), c.object_index(x));
}

std::size_t label_index(const LinearCategory& c, std::size_t y, std::size_t x, const std::string& label)
{
    const auto& labels = c.hom_labels(y, x);
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

// Matrix units e11, e12, e21, e22 with e_ij e_kl = [j = k] e_il.
FlatAlgebra matrix_algebra()
{
    FlatAlgebra a;
    a.field = Q;
    a.labels = {"e11", "e12", "e21", "e22"};
    a.products.assign(16, Vector(4));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (j == k)
                        a.products[(2 * i + j) * 4 + 2 * k + l][2 * i + l] = 1;
    a.idempotents = {{1, 0, 0, 0}, {0, 0, 0, 1}};
    a.idempotent_names = {"p", "q"};
    return a;
}

// One object with endomorphisms k x k (two orthogonal idempotents e1, e2).
LinearCategory split_point()
{
    FlatAlgebra a;
    a.field = Q;
    a.labels = {"e1", "e2"};
    a.products = {{1, 0}, {0, 0}, {0, 0}, {0, 1}};
    a.idempotents = {{1, 1}};
    a.idempotent_names = {"x"};
    return category_from_algebra(a);
}

} // namespace

TEST_CASE("presentations: dimensions of the standard examples")
{
    auto k = from_presentation(fixtures::point(), Q);
    CHECK(k.object_count() == 1);
    CHECK(k.hom_dim(0, 0) == 1);

    auto kr = from_presentation(fixtures::kronecker(), Q);
    CHECK(dim(kr, "x", "x") == 1);
    CHECK(dim(kr, "y", "y") == 1);
    CHECK(dim(kr, "y", "x") == 2);
    CHECK(dim(kr, "x", "y") == 0);
    CHECK(kr.hom_labels(1, 0) == std::vector<std::string>{"a", "b"});

    auto c = from_presentation(fixtures::crown(), Q);
    CHECK(c.object_count() == 4);
    CHECK(c.total_dim() == 8);
    CHECK(dim(c, "y", "x") == 1);
    CHECK(dim(c, "ty", "x") == 1);
    CHECK(dim(c, "ty", "tx") == 1);
    CHECK(dim(c, "y", "tx") == 1);
    CHECK(dim(c, "tx", "x") == 0);
}

TEST_CASE("presentations: relations and truncation")
{
    auto z = from_presentation(fixtures::a3_zero(), Q);
    CHECK(z.total_dim() == 5);
    CHECK(dim(z, "3", "1") == 0);
    CHECK(from_presentation(fixtures::a3(), Q).total_dim() == 6);

    PresentedCategory sq(fixtures::square(), Q);
    const auto& s = *sq.category();
    CHECK(s.total_dim() == 9);
    CHECK(dim(s, "w", "x") == 1);
    CHECK(sq.reduce_path({"b", "a"}) == sq.reduce_path({"d", "c"}));

    PresentedCategory lp(fixtures::loop(3), Q);
    const auto& l = *lp.category();
    CHECK(l.hom_dim(0, 0) == 3);
    CHECK(l.hom_labels(0, 0) == std::vector<std::string>{"1_x", "a", "a*a"});
    CHECK(l.product(0, 0, 0, 1, 1) == Vector{0, 0, 1});
    CHECK(is_zero(l.product(0, 0, 0, 2, 1)));
    CHECK(is_zero(lp.reduce_path({"a", "a", "a"})));

    auto cyc = from_presentation(fixtures::two_cycle(3), Q);
    CHECK(cyc.total_dim() == 6);

    // a = 2b identifies the two arrows; the larger path b is eliminated.
    QuiverPresentation q = fixtures::kronecker();
    q.relations.push_back({{{1, {"a"}, ""}, {-2, {"b"}, ""}}});
    PresentedCategory kq(q, Q);
    CHECK(kq.category()->hom_dim(1, 0) == 1);
    CHECK(kq.reduce_path({"b"}) == Vector{mpq_class(1, 2)});
    CHECK(to_string(q.relations[0]) == "a - 2 b");
}

TEST_CASE("presentations: input errors")
{
    QuiverPresentation bad = fixtures::kronecker();
    bad.relations.push_back({{{1, {"a"}, ""}, {1, {}, "x"}}});
    CHECK_THROWS_AS(from_presentation(bad, Q), InputError);

    bad = fixtures::a3();
    bad.relations.push_back({{{1, {"a", "b"}, ""}}});
    CHECK_THROWS_AS(from_presentation(bad, Q), InputError);

    bad = fixtures::loop(2);
    bad.nilpotence_bound.reset();
    CHECK_THROWS_AS(from_presentation(bad, Q), InputError);

    bad = fixtures::kronecker();
    bad.arrows.push_back({"c", "x", "nowhere"});
    CHECK_THROWS_AS(from_presentation(bad, Q), InputError);
}

TEST_CASE("categories reject broken structure constants")
{
    CategoryData d;
    d.field = Q;
    d.objects = {"x"};
    d.hom_labels = {{"1", "e"}};
    // e * e = 1 but the claimed identity is e.
    d.products = {{{1, 0}, {0, 1}, {0, 1}, {1, 0}}};
    d.identities = {{0, 1}};
    CHECK_THROWS_AS(LinearCategory{d}, InvariantError);
}

TEST_CASE("functors")
{
    auto c = share(from_presentation(fixtures::kronecker(), Q));
    LinearFunctor id = identity_functor(c);
    CHECK_NOTHROW(id.validate());
    LinearFunctor broken = id;
    broken.hom_maps[0] = Matrix(Q, 1, 1);
    CHECK_THROWS_AS(broken.validate(), InvariantError);
}

TEST_CASE("flattening and the associated category")
{
    auto k = flatten_to_algebra(from_presentation(fixtures::point(), Q));
    CHECK(k.dim() == 1);
    auto kr_cat = from_presentation(fixtures::kronecker(), Q);
    auto kr = flatten_to_algebra(kr_cat);
    CHECK(kr.dim() == 4);
    CHECK(kr.idempotents.size() == 2);
    CHECK_NOTHROW(kr.validate());
    CHECK_NOTHROW(kr.check_idempotents());
    auto cr = flatten_to_algebra(from_presentation(fixtures::crown(), Q));
    CHECK(cr.dim() == 8);
    CHECK(cr.idempotents.size() == 4);

    CHECK(category_from_algebra(kr) == kr_cat);

    auto m = category_from_algebra(matrix_algebra());
    CHECK(m.object_count() == 2);
    for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x)
            CHECK(m.hom_dim(y, x) == 1);

    FlatAlgebra bad = matrix_algebra();
    bad.idempotents = {{1, 0, 0, 0}};
    bad.idempotent_names = {"p"};
    CHECK_THROWS_AS(category_from_algebra(bad), PreconditionError);
}

TEST_CASE("contraction and expansion")
{
    auto kr = from_presentation(fixtures::kronecker(), Q);
    auto one = contract(kr, {0});
    CHECK(same_hom_dims(one, kr));

    auto whole = contract(kr, {0, 1});
    CHECK(whole.object_count() == 1);
    CHECK(whole.hom_dim(0, 0) == 4);
    CHECK(whole.object_name(0) == "x+y");

    auto c = from_presentation(fixtures::crown(), Q);
    auto cxy = contract(c, {0, 1});
    CHECK(cxy.object_count() == 3);
    CHECK(cxy.hom_dim(0, 0) == 3);
    CHECK_THROWS_AS(contract(c, {7}), PreconditionError);

    CHECK(same_hom_dims(expand(kr, 0, {kr.identity(0)}, {"x"}), kr));

    Vector ex(4), ey(4);
    ex[label_index(whole, 0, 0, "1_x")] = 1;
    ey[label_index(whole, 0, 0, "1_y")] = 1;
    auto back = expand(whole, 0, {ex, ey}, {"x", "y"});
    CHECK(same_hom_dims(back, kr));

    auto sp = split_point();
    auto two = expand(sp, 0, {{1, 0}, {0, 1}});
    CHECK(two.object_count() == 2);
    CHECK(two.hom_dim(0, 0) == 1);
    CHECK(two.hom_dim(1, 1) == 1);
    CHECK(two.hom_dim(0, 1) == 0);
    CHECK(two.hom_dim(1, 0) == 0);
    CHECK(two.object_name(1) == "x.2");

    CHECK_THROWS_AS(expand(sp, 0, {{1, 0}}), PreconditionError);
    CHECK_THROWS_AS(expand(sp, 0, {{1, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("hypothesis checks")
{
    auto k = hypothesis_checks(from_presentation(fixtures::point(), Q));
    CHECK(k.all());

    auto kr = hypothesis_checks(from_presentation(fixtures::kronecker(), Q));
    CHECK(kr.connected);
    CHECK(kr.basic);
    CHECK(kr.totally_split);

    auto pt = from_presentation(fixtures::point(), Q);
    CHECK_FALSE(hypothesis_checks(disjoint_union(pt, pt)).connected);

    auto lp = from_presentation(fixtures::loop(3), Q);
    auto chi = local_character(lp, 0);
    REQUIRE(chi);
    CHECK(*chi == Vector{1, 0, 0});
    CHECK(nilpotent_part(lp, 0)->dim() == 2);

    auto cyc = hypothesis_checks(from_presentation(fixtures::two_cycle(3), Q));
    CHECK(cyc.basic);
    CHECK(cyc.totally_split);
    // a and b compose to zero when paths of length 2 vanish.
    auto cyc_short = from_presentation(fixtures::two_cycle(2), Q);
    CHECK_FALSE(objects_isomorphic(cyc_short, 0, 1));

    // Matrix units: p and q are isomorphic.
    auto m = category_from_algebra(matrix_algebra());
    auto mr = hypothesis_checks(m);
    CHECK_FALSE(mr.basic);
    CHECK(mr.totally_split);
    CHECK(objects_isomorphic(m, 0, 1));

    // GF(4) as a GF(2)-algebra is a field extension, so not split.
    FlatAlgebra f4;
    f4.field = Field::prime(2);
    f4.labels = {"1", "t"};
    f4.products = {{1, 0}, {0, 1}, {0, 1}, {1, 1}};
    f4.idempotents = {{1, 0}};
    f4.idempotent_names = {"x"};
    auto f4r = hypothesis_checks(category_from_algebra(f4));
    CHECK_FALSE(f4r.totally_split);
    CHECK(f4r.basic);

    // k x k at one object is not local.
    CHECK_FALSE(local_character(split_point(), 0));
}

TEST_CASE("property: random monomial quivers match path counting")
{
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        RandomQuiver r = random_quiver(rng);
        const Field& f = trial % 2 ? Q : Field::prime(3);
        auto c = from_presentation(r.q, f);
        for (const auto& y : r.q.vertices)
            for (const auto& x : r.q.vertices)
                CHECK(dim(c, y, x) == count_paths(r, y, x));
    }
}

TEST_CASE("property: flatten round trip and contract-expand")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        RandomQuiver r = random_quiver(rng);
        auto c = from_presentation(r.q, Q);
        FlatAlgebra a = flatten_to_algebra(c);
        CHECK(a.dim() == c.total_dim());
        CHECK(category_from_algebra(a) == c);

        std::vector<std::size_t> subset;
        for (std::size_t v = 0; v < c.object_count(); ++v)
            if (rng() % 2)
                subset.push_back(v);
        if (subset.empty())
            subset.push_back(0);
        auto small = contract(c, subset);
        std::size_t at = subset[0]; // contracted object sits at the first member's position
        std::vector<Vector> idempotents;
        std::vector<std::string> names;
        for (auto m : subset) {
            Vector e(small.hom_dim(at, at));
            e[label_index(small, at, at, "1_" + c.object_name(m))] = 1;
            idempotents.push_back(e);
            names.push_back(c.object_name(m));
        }
        auto big = expand(small, at, idempotents, names);
        REQUIRE(big.object_count() == c.object_count());
        for (const auto& y : c.object_names())
            for (const auto& x : c.object_names())
                CHECK(dim(big, y, x) == dim(c, y, x));
    }
}

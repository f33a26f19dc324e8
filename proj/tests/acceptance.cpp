// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hmcl/cli/run.hpp"
#include "hmcl/spectral/cartan_leray.hpp"
#include "hmcl/spectral/group_homology.hpp"
#include "support/covers.hpp"
#include "support/fixtures.hpp"
#include "support/random_quiver.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hmcl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

// Collects mismatches; a criterion passes when none were recorded.
struct Checker {
    std::vector<std::string> problems;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok)
            problems.push_back(what);
    }
    template <class A, class B>
    void equal(const A& a, const B& b, const std::string& what)
    {
        std::ostringstream os;
        os << what << ": " << a << " vs " << b;
        expect(a == b, os.str());
    }
};

std::string dims(const std::vector<std::size_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

GroupPtr cyclic(std::size_t n)
{
    return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
}

struct Covering {
    std::shared_ptr<PresentedCategory> presented;
    std::shared_ptr<QuotientData> quotient;
};

Covering kronecker_covering(const Field& f)
{
    auto p = std::make_shared<PresentedCategory>(fixtures::crown(), f);
    GroupAction a = action_from_presentation(cyclic(2), *p, {fixtures::crown_swap_image(1)});
    return {p, std::make_shared<QuotientData>(quotient_category(a))};
}

struct NamedFixture {
    std::string name;
    QuiverPresentation q;
};

std::vector<NamedFixture> fixture_categories()
{
    return {{"point", fixtures::point()},         {"kronecker", fixtures::kronecker()},
            {"crown", fixtures::crown()},         {"a3", fixtures::a3()},
            {"a3 with zero relation", fixtures::a3_zero()},
            {"loop, e^3 = 0", fixtures::loop(3)}, {"two-cycle, paths < 2", fixtures::two_cycle(2)},
            {"commutative square", fixtures::square()}};
}

// 1
std::string kronecker_reproduction(Checker& c)
{
    auto start = Clock::now();
    std::string detail;
    for (const Field& f : {Field::prime(3), Field::rationals()}) {
        Covering k = kronecker_covering(f);
        const QuotientData& q = *k.quotient;
        Bimodule lb = lift(q.projection, standard(q.quotient));
        std::size_t hc = hochschild_cohomology_dims(standard(q.action.category_ptr()), 1)[1];
        std::size_t hb = hochschild_cohomology_dims(standard(q.quotient), 1)[1];
        auto eq = homology_with_action(action_on_cochains(q.action, lb, 2));
        std::size_t hl = eq.actions[1].dim;
        std::size_t fixed = fixed_points(eq.actions[1]).dim();
        c.equal(hc, 1u, f.name() + " dim H^1(C,C)");
        c.equal(hb, 3u, f.name() + " dim H^1(B,B)");
        c.equal(hl, 5u, f.name() + " dim H^1(C,LB)");
        c.equal(fixed, 3u, f.name() + " dim H^1(C,LB)^G");
        detail += f.name() + ": " + std::to_string(hc) + "/" + std::to_string(hb) + "/" + std::to_string(hl) + "/" +
                  std::to_string(fixed) + "  ";
    }
    double t = seconds_since(start);
    c.expect(t < 10.0, "runtime " + std::to_string(t) + " s");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", t);
    return detail + buf;
}

// 2
std::string maschke(Checker& c)
{
    Covering k = kronecker_covering(Field::prime(3));
    MaschkeReport r = maschke_compare(*k.quotient, standard(k.quotient->quotient), 2);
    std::string h, co;
    for (const auto& d : r.homology) {
        c.equal(d.base, d.reduced, "H_" + std::to_string(d.degree));
        h += std::to_string(d.base) + "=" + std::to_string(d.reduced) + " ";
    }
    for (const auto& d : r.cohomology) {
        c.equal(d.base, d.reduced, "H^" + std::to_string(d.degree));
        co += std::to_string(d.base) + "=" + std::to_string(d.reduced) + " ";
    }
    c.equal(r.homology.size() + r.cohomology.size(), 6u, "degrees compared");
    return "GF(3), n=0..2, homology " + h + "cohomology " + co;
}

// 3
std::string cartan_leray(Checker& c)
{
    const std::size_t P = 5, Q = 5;
    std::string detail;
    for (const Field& f : {Field::prime(3), Field::prime(2)}) {
        Covering k = kronecker_covering(f);
        const QuotientData& q = *k.quotient;
        Bimodule m = standard(q.quotient);
        DoubleComplex d = cartan_leray_double_complex(q, m, P, Q);
        auto pages = spectral_pages(d, Filtration::Columns, limit_page_index(d));
        auto expect = group_homology_of_homology(q, m, 2, 2);
        for (std::size_t p = 0; p <= 2; ++p)
            for (std::size_t qq = 0; qq <= 2; ++qq) {
                c.expect(pages[2].reliable[p][qq], "E2 entry outside the reliable window");
                c.equal(pages[2].dims[p][qq], expect[p][qq],
                        f.name() + " E2_{" + std::to_string(p) + "," + std::to_string(qq) + "}");
            }
        auto sums = diagonal_sums(pages.back());
        auto direct = hochschild_homology_dims(m, 2);
        for (std::size_t n = 0; n <= 2; ++n) {
            c.expect(n + 1 <= std::min(P, Q), "abutment degree outside the window");
            c.equal(sums[n], direct[n], f.name() + " abutment n=" + std::to_string(n));
        }
        std::vector<std::size_t> e2col;
        for (std::size_t p = 0; p <= 2; ++p)
            e2col.push_back(pages[2].dims[p][0]);
        detail += f.name() + ": E2_{p,0} p<=2 " + dims(e2col) + ", E_inf sums " +
                  dims({sums[0], sums[1], sums[2]}) + " = " + dims(direct) + "  ";
    }
    return detail + "(P=Q=5)";
}

// 4
std::string agreement(Checker& c)
{
    std::size_t used = 0;
    double worst = 0;
    for (const auto& fx : fixture_categories())
        for (const Field& f : {Field::rationals(), Field::prime(2)}) {
            auto cat = share(from_presentation(fx.q, f));
            if (cat->total_dim() > 10)
                continue;
            auto start = Clock::now();
            Bimodule m = standard(cat);
            auto a = hochschild_cohomology_dims(m, 2);
            auto b = homology(algebra_hochschild_cochain(flatten_to_algebra(*cat), m, 3)).dims();
            c.equal(dims(a), dims(b), fx.name + " over " + f.name());
            double t = seconds_since(start);
            worst = std::max(worst, t);
            c.expect(t < 60.0, fx.name + " took " + std::to_string(t) + " s");
            ++used;
        }
    c.expect(used >= 10, "too few fixtures within the size bound");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu fixture/field pairs with dim <= 10, slowest %.2f s", used, worst);
    return buf;
}

// 5: through the job runner, on every fixture, contracting all objects and
// (when there are several) the first two.
std::string contraction(Checker& c)
{
    JobFile job;
    job.field = Field::prime(3);
    std::size_t categories = 0;
    for (const auto& fx : fixture_categories()) {
        CategoryDecl d;
        d.name = "C" + std::to_string(categories++);
        d.presentation = fx.q;
        job.declarations.push_back(d);
        job.commands.push_back({"verify", "contraction", {d.name}, {{"max_degree", "2"}}, {}});
        if (fx.q.vertices.size() > 1)
            job.commands.push_back({"verify",
                                    "contraction",
                                    {d.name},
                                    {{"max_degree", "2"}, {"objects", fx.q.vertices[0] + "," + fx.q.vertices[1]}},
                                    {}});
    }
    Report r = run_job(parse_job(print_job(job)));
    std::size_t passed = 0;
    for (const auto& cmd : r.commands) {
        c.expect(cmd.status == CommandReport::Status::Pass, cmd.command + ": " + to_string(cmd.status) + " " +
                                                                cmd.message);
        passed += cmd.status == CommandReport::Status::Pass;
    }
    c.expect(categories >= 5, "fewer than five categories");
    return std::to_string(passed) + "/" + std::to_string(r.commands.size()) + " round trips on " +
           std::to_string(categories) + " categories, degrees <= 2";
}

// 6
std::string duality(Checker& c)
{
    std::string detail;
    for (const Field& f : {Field::prime(3), Field::rationals()}) {
        Covering k = kronecker_covering(f);
        Bimodule s = standard(k.quotient->quotient);
        for (const Bimodule& y : {s, dual(s)}) {
            auto h = hochschild_homology_dims(y, 3);
            auto co = hochschild_cohomology_dims(dual(y), 3);
            c.equal(dims(h), dims(co), f.name() + " H_n(B,Y) vs H^n(B,DY)");
            detail += dims(h) + "=" + dims(co) + " ";
        }
    }
    for (const auto& fx : fixture_categories()) {
        auto cat = share(from_presentation(fx.q, Field::prime(2)));
        Bimodule s = standard(cat);
        for (const Bimodule& y : {s, dual(s)})
            c.equal(dims(hochschild_homology_dims(y, 3)), dims(hochschild_cohomology_dims(dual(y), 3)),
                    fx.name + " over GF(2)");
    }
    return "Kronecker quotient, Y = B and D B, n <= 3: " + detail + "(plus all fixtures over GF(2))";
}

// 7
std::string embedding(Checker& c)
{
    std::string detail;
    for (const Field& f : {Field::rationals(), Field::prime(2)}) {
        Covering k = kronecker_covering(f);
        HomEmbeddingReport h = verify_hom_embedding(*k.quotient, cyclic_presentation(2));
        c.equal(h.hom_dim, f.is_rationals() ? 0u : 1u, f.name() + " dim Hom(Z/2, k+)");
        c.expect(h.hom_dim <= h.h1_dim, f.name() + " hom_dim <= h1");
        c.expect(h.constant_is_cocycle, f.name() + " constant tuple is not a cocycle");
        c.expect(h.splitting, f.name() + " H^0(C,LB) does not split as k + radical part");
        if (f.is_rationals())
            c.equal(h.h1_dim, 3u, "dim H^1(B,B) in char 0");
        RankBoundReport r = verify_rank_bound(cyclic_presentation(2), k.quotient.get());
        c.equal(r.rank, 0u, "rank Z/2");
        c.expect(r.ok(), "rank bound");
        detail += f.name() + ": " + std::to_string(h.hom_dim) + " <= " + std::to_string(h.h1_dim) + ", H^0 = 1 + " +
                  std::to_string(h.radical_dim) + ", rank " + std::to_string(r.rank) + " <= " +
                  std::to_string(*r.h1_dim) + "  ";
    }
    return detail;
}

// 8: random instances from small hand-rolled generators.
std::string structural(Checker& c)
{
    std::mt19937 rng(8);
    const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3)};
    std::size_t complexes = 0, free_modules = 0, matrices = 0, smiths = 0, bicomplexes = 0;

    auto d_squared = [&](const BasedComplex& b, const std::string& what) {
        try {
            b.validate();
        } catch (const InvariantError& e) {
            c.expect(false, what + ": " + e.what());
        }
        ++complexes;
    };

    std::vector<QuiverPresentation> quivers;
    for (const auto& fx : fixture_categories())
        quivers.push_back(fx.q);
    for (int i = 0; i < 10; ++i)
        quivers.push_back(fixtures::random_quiver(rng).q);
    for (const auto& q : quivers)
        for (const Field& f : fields) {
            auto cat = share(from_presentation(q, f));
            Bimodule s = standard(cat);
            d_squared(chain_complex(s, 3).complex, "chains");
            d_squared(cochain_complex(s, 3).complex, "cochains");
            d_squared(cochain_complex(dual(s), 3).complex, "cochains, dual coefficients");
        }

    for (std::size_t n : {2u, 3u}) {
        auto bar = bar_resolution(cyclic(n), Field::prime(3), 3);
        d_squared(bar.complex, "bar resolution");
        c.expect(bar.exact, "bar resolution not exact");
        KGModule reg = KGModule::regular(cyclic(n), Field::prime(3));
        d_squared(group_chain_complex(reg, 3), "group chains");
        d_squared(group_cochain_complex(reg, 3), "group cochains");
    }

    // Covers: the crown and random voltage covers by Z/2, Z/3 and Z/2 x Z/2.
    auto v4 = std::make_shared<const FiniteGroup>(FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                                                              FiniteGroup::cyclic(2)));
    std::vector<std::pair<std::shared_ptr<PresentedCategory>, std::shared_ptr<QuotientData>>> covers;
    for (const Field& f : fields) {
        Covering k = kronecker_covering(f);
        covers.push_back({k.presented, k.quotient});
    }
    for (int i = 0; i < 6; ++i) {
        fixtures::RandomQuiver base = fixtures::random_quiver(rng);
        GroupPtr g = i % 3 == 0 ? cyclic(2) : i % 3 == 1 ? cyclic(3) : v4;
        auto cover = fixtures::voltage_cover(base.q, g, rng);
        auto p = std::make_shared<PresentedCategory>(cover.total, fields[i % 3]);
        auto a = action_from_presentation(g, *p, cover.generators);
        covers.push_back({p, std::make_shared<QuotientData>(quotient_category(a))});
    }
    for (const auto& [p, q] : covers) {
        const std::size_t order = q->action.group().order();
        Bimodule m = standard(q->quotient);
        for (const Bimodule& coeff : {m, dual(m)}) {
            EquivariantComplex e = action_on_chains(q->action, lift(q->projection, coeff), 3);
            d_squared(e.complex, "equivariant chains");
            for (std::size_t deg = 0; deg < e.actions.size(); ++deg) {
                c.expect(e.actions[deg].dim % order == 0, "C_q dimension not divisible by |G|");
                c.expect(is_free_on_basis(e.actions[deg]), "C_q not kG-free on its basis");
                ++free_modules;
            }
        }
        DoubleComplex d = cartan_leray_double_complex(*q, m, 2, 2);
        try {
            d.validate();
        } catch (const InvariantError& e) {
            c.expect(false, std::string("bicomplex: ") + e.what());
        }
        ++bicomplexes;
        d_squared(total_complex(d).complex, "total complex");
    }

    // rank + nullity = columns
    for (int i = 0; i < 60; ++i) {
        const Field& f = fields[i % 3];
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
        for (auto& r : entries)
            for (auto& x : r)
                x = rng() % 3 == 0 ? static_cast<long>(rng() % 11) - 5 : 0;
        Matrix m = Matrix::from_rows(f, entries);
        Subspace k = kernel_basis(m);
        c.equal(rank(m) + k.dim(), cols, "rank-nullity");
        for (std::size_t r = 0; r < k.dim(); ++r) {
            Vector v(cols);
            for (std::size_t j = 0; j < cols; ++j)
                v[j] = k.basis().at(r, j);
            bool zero = true;
            for (const auto& x : m.apply(v))
                zero = zero && x == 0;
            c.expect(zero, "kernel vector not in the kernel");
        }
        ++matrices;
    }

    // d_1 | d_2 | ... and |det| = product for square matrices
    for (int i = 0; i < 60; ++i) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        if (i % 2)
            cols = rows;
        std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
        for (auto& r : entries)
            for (auto& x : r)
                x = static_cast<long>(rng() % 13) - 6;
        IntMatrix m = IntMatrix::from_rows(entries);
        SmithForm s = smith_normal_form(m);
        for (std::size_t k = 0; k < s.invariant_factors.size(); ++k) {
            c.expect(s.invariant_factors[k] > 0, "non-positive invariant factor");
            if (k + 1 < s.invariant_factors.size())
                c.expect(s.invariant_factors[k + 1] % s.invariant_factors[k] == 0, "divisibility chain broken");
        }
        c.equal(s.free_rank + s.invariant_factors.size(), cols, "free rank + factors");
        c.equal(s.invariant_factors.size(), rank(Matrix::from_rows(Field::rationals(), entries)), "SNF rank");
        if (rows == cols) {
            mpz_class product = 1;
            for (const auto& d : s.invariant_factors)
                product *= d;
            if (s.invariant_factors.size() < rows)
                product = 0;
            mpz_class det = determinant(m);
            c.equal(mpz_class(abs(det)).get_str(), product.get_str(), "|det| = product of factors");
        }
        ++smiths;
    }

    return std::to_string(complexes) + " complexes with d^2 = 0, " + std::to_string(bicomplexes) +
           " bicomplexes, " + std::to_string(free_modules) + " free C_q, " + std::to_string(matrices) +
           " rank-nullity, " + std::to_string(smiths) + " SNF chains";
}

} // namespace

int main()
{
    struct Criterion {
        const char* title;
        std::function<std::string(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"Kronecker covering reproduction", kronecker_reproduction},
        {"Maschke comparison", maschke},
        {"Cartan-Leray E2 cross-check", cartan_leray},
        {"agreement with the algebra complex", agreement},
        {"contraction/expansion invariance", contraction},
        {"duality", duality},
        {"Hom(G, k+) embedding and rank bound", embedding},
        {"structural properties", structural},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        std::string detail;
        try {
            detail = criteria[i].run(c);
        } catch (const std::exception& e) {
            c.problems.push_back(std::string("exception: ") + e.what());
        }
        while (!detail.empty() && detail.back() == ' ')
            detail.pop_back();
        bool ok = c.problems.empty();
        failures += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].title << " [" << c.checks
                  << " checks] " << detail << "\n";
        for (const auto& p : c.problems)
            std::cout << "      " << p << "\n";
    }
    std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << criteria.size() - failures << "/"
              << criteria.size() << ")\n";
    return failures ? 1 : 0;
}

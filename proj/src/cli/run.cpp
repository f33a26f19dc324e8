#include "hmcl/cli/run.hpp"

#include "hmcl/covering/action.hpp"
#include "hmcl/hochmitch/hochschild.hpp"
#include "hmcl/lincat/algebra.hpp"
#include "hmcl/spectral/cartan_leray.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace hmcl {

namespace {

struct CategoryEntry {
    CategoryPtr category;
    std::shared_ptr<const PresentedCategory> presented; // null for quotients
};

struct GroupEntry {
    GroupPtr group; // null for groups known only by a presentation
    GroupPresentation presentation;
};

struct ActionEntry {
    std::string group;
    std::shared_ptr<const GroupAction> action;
    mutable std::shared_ptr<const QuotientData> quotient;
};

GroupPresentation product_presentation(const GroupPresentation& a, const GroupPresentation& b)
{
    GroupPresentation p = a;
    const std::size_t shift = a.generators.size();
    for (const auto& g : b.generators)
        p.generators.push_back(g);
    for (auto w : b.relators) {
        for (auto& f : w)
            f.first += shift;
        p.relators.push_back(w);
    }
    for (std::size_t i = 0; i < a.generators.size(); ++i)
        for (std::size_t j = 0; j < b.generators.size(); ++j)
            p.relators.push_back({{i, 1}, {shift + j, 1}, {i, -1}, {shift + j, -1}});
    return p;
}

class Environment {
public:
    explicit Environment(const JobFile& job) : field_(job.field)
    {
        for (const auto& d : job.declarations)
            std::visit([&](const auto& x) { build_with_context(x); }, d);
    }

    const Field& field() const { return field_; }

    const CategoryEntry& category(const std::string& n) const { return categories_.at(n); }
    const GroupEntry& group(const std::string& n) const { return groups_.at(n); }
    const ActionEntry& action(const std::string& n) const { return actions_.at(n); }

    const QuotientData& quotient(const std::string& n) const
    {
        const ActionEntry& a = actions_.at(n);
        if (!a.quotient)
            a.quotient = std::make_shared<const QuotientData>(quotient_category(*a.action));
        return *a.quotient;
    }

    // A bimodule name, or a category name standing for its standard bimodule.
    Bimodule coefficients(const std::string& n) const
    {
        auto it = bimodules_.find(n);
        if (it != bimodules_.end())
            return it->second;
        return standard(categories_.at(n).category);
    }

    bool is_category(const std::string& n) const { return categories_.count(n) > 0; }

    CheckSummary summary() const
    {
        return {categories_.size(), groups_.size(), actions_.size(), bimodules_.size(), 0};
    }

private:
    Field field_;
    std::map<std::string, CategoryEntry> categories_;
    std::map<std::string, GroupEntry> groups_;
    std::map<std::string, ActionEntry> actions_;
    std::map<std::string, Bimodule> bimodules_;

    template <class D>
    void build_with_context(const D& d)
    {
        try {
            build(d);
        } catch (const Error& e) {
            throw InputError("line " + std::to_string(d.line.value) + ": " + kind_of(d) + " '" + d.name +
                             "': " + e.what());
        }
    }

    static const char* kind_of(const CategoryDecl&) { return "category"; }
    static const char* kind_of(const GroupDecl&) { return "group"; }
    static const char* kind_of(const ActionDecl&) { return "action"; }
    static const char* kind_of(const BimoduleDecl&) { return "bimodule"; }

    void build(const CategoryDecl& d)
    {
        if (d.is_quotient()) {
            categories_[d.name] = {quotient(d.quotient_of).quotient, nullptr};
            return;
        }
        auto pc = std::make_shared<const PresentedCategory>(d.presentation, field_);
        categories_[d.name] = {pc->category(), pc};
    }

    void build(const GroupDecl& d)
    {
        GroupEntry e;
        switch (d.kind) {
        case GroupDecl::Kind::Cyclic:
            e.group = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(d.order));
            e.presentation = cyclic_presentation(d.order);
            break;
        case GroupDecl::Kind::Table: {
            std::map<std::string, std::size_t> index;
            for (std::size_t i = 0; i < d.elements.size(); ++i)
                index[d.elements[i]] = i;
            std::vector<std::vector<std::size_t>> table;
            for (const auto& row : d.rows) {
                table.emplace_back();
                for (const auto& x : row)
                    table.back().push_back(index.at(x));
            }
            e.group = std::make_shared<const FiniteGroup>(d.elements, table);
            e.presentation = table_presentation(*e.group);
            break;
        }
        case GroupDecl::Kind::Presentation:
            e.presentation = d.presentation;
            break;
        case GroupDecl::Kind::Product: {
            const GroupEntry& a = groups_.at(d.factors[0]);
            const GroupEntry& b = groups_.at(d.factors[1]);
            if (a.group && b.group)
                e.group = std::make_shared<const FiniteGroup>(FiniteGroup::direct_product(*a.group, *b.group));
            e.presentation = product_presentation(a.presentation, b.presentation);
            break;
        }
        }
        groups_[d.name] = e;
    }

    void build(const ActionDecl& d)
    {
        const GroupEntry& g = groups_.at(d.group);
        if (!g.group)
            throw InputError("group '" + d.group + "' is given by a presentation and cannot act");
        const CategoryEntry& c = categories_.at(d.category);
        if (!c.presented)
            throw InputError("category '" + d.category + "' is not given by a presentation");
        const QuiverPresentation& q = c.presented->presentation();
        std::set<std::string> objects(q.vertices.begin(), q.vertices.end()), arrows;
        for (const auto& a : q.arrows)
            arrows.insert(a.name);

        std::vector<GeneratorImage> images;
        for (const auto& gen : d.generators) {
            GeneratorImage im;
            im.element = gen.element;
            for (const auto& m : gen.items) {
                bool is_obj = objects.count(m.from) > 0, is_arrow = arrows.count(m.from) > 0;
                if (is_obj && is_arrow)
                    throw InputError("'" + m.from + "' names both an object and an arrow");
                if (is_obj) {
                    if (!objects.count(m.to))
                        throw InputError("object '" + m.from + "' is sent to '" + m.to + "', which is not an object");
                    if (m.coefficient != 1)
                        throw InputError("object '" + m.from + "' cannot carry a scalar");
                    im.objects.push_back({m.from, m.to});
                } else if (is_arrow) {
                    if (!arrows.count(m.to))
                        throw InputError("arrow '" + m.from + "' is sent to '" + m.to + "', which is not an arrow");
                    im.arrows.push_back({m.from, m.coefficient, m.to});
                } else {
                    throw InputError("unknown object or arrow '" + m.from + "'");
                }
            }
            images.push_back(im);
        }
        ActionEntry e;
        e.group = d.group;
        e.action = std::make_shared<const GroupAction>(action_from_presentation(g.group, *c.presented, images));
        actions_[d.name] = e;
    }

    void build(const BimoduleDecl& d)
    {
        switch (d.kind) {
        case BimoduleDecl::Kind::Standard:
            bimodules_.emplace(d.name, standard(categories_.at(d.args[0]).category));
            break;
        case BimoduleDecl::Kind::Lift: {
            const QuotientData& q = quotient(d.args[0]);
            const Bimodule& m = bimodules_.at(d.args[1]);
            if (!(m.base() == *q.quotient))
                throw InputError("'" + d.args[1] + "' does not live over the quotient of '" + d.args[0] + "'");
            bimodules_.emplace(d.name, lift(q.projection, m));
            break;
        }
        case BimoduleDecl::Kind::Dual:
            bimodules_.emplace(d.name, dual(bimodules_.at(d.args[0])));
            break;
        case BimoduleDecl::Kind::Tensor: {
            const Bimodule& a = bimodules_.at(d.args[0]);
            const Bimodule& b = bimodules_.at(d.args[1]);
            if (!(a.base() == b.base()))
                throw InputError("tensor factors live over different categories");
            bimodules_.emplace(d.name, tensor_bimodules(a, b));
            break;
        }
        }
    }
};

using Status = CommandReport::Status;

void verdict(CommandReport& r, std::string check, std::optional<std::size_t> degree, std::size_t lhs,
             const char* relation, std::size_t rhs)
{
    bool pass = std::string(relation) == "=" ? lhs == rhs : lhs <= rhs;
    r.verdicts.push_back({std::move(check), degree, static_cast<long long>(lhs), relation,
                          static_cast<long long>(rhs), pass});
}

void degree_verdicts(CommandReport& r, const std::string& check, const std::vector<std::size_t>& a,
                     const std::vector<std::size_t>& b)
{
    for (std::size_t n = 0; n < a.size() && n < b.size(); ++n)
        verdict(r, check, n, a[n], "=", b[n]);
}

std::string join_names(const std::vector<std::string>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + xs[i];
    return out;
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<std::size_t> algebra_cohomology(const Bimodule& m, std::size_t top, std::size_t cap)
{
    return homology(algebra_hochschild_cochain(flatten_to_algebra(m.base()), m, top + 1, cap)).dims();
}

// Vectors of hom(w, w) in the contracted category that are the identities of
// the members. hom(w, w) has the echelon basis of e A e, which for a sum e
// of basis idempotents is the set of basis elements between members, in
// flattened order.
std::vector<Vector> member_idempotents(const LinearCategory& c, const std::vector<std::size_t>& members,
                                       const LinearCategory& small, std::size_t at)
{
    FlatAlgebra a = flatten_to_algebra(c);
    std::set<std::size_t> in(members.begin(), members.end());
    std::vector<std::size_t> positions;
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (in.count(a.tags[k].first) && in.count(a.tags[k].second))
            positions.push_back(k);
    if (positions.size() != small.hom_dim(at, at))
        throw InvariantError("contracted endomorphism space has an unexpected dimension");
    std::vector<Vector> out;
    for (auto m : members) {
        Vector e;
        for (auto k : positions)
            e.push_back(a.idempotents[m][k]);
        out.push_back(std::move(e));
    }
    return out;
}

class Runner {
public:
    explicit Runner(const Environment& env) : env_(env) {}

    void run(const Command& c, CommandReport& r)
    {
        const std::string key = c.title();
        if (key == "hh" || key == "cohh") {
            Bimodule m = env_.coefficients(c.args[0]);
            std::size_t top = c.size_param("max_degree", 3);
            bool chains = key == "hh";
            r.series.push_back({chains ? "H_n" : "H^n", chains ? hochschild_homology_dims(m, top)
                                                               : hochschild_cohomology_dims(m, top)});
        } else if (key == "center") {
            r.series.push_back({"dim Z", {center(*env_.category(c.args[0]).category).dim}});
        } else if (key == "quotient") {
            run_quotient(c, r);
        } else if (key == "cl-pages") {
            run_pages(c, r);
        } else if (key == "verify maschke") {
            run_maschke(c, r);
        } else if (key == "verify duality") {
            run_duality(c, r);
        } else if (key == "verify agreement") {
            Bimodule m = env_.coefficients(c.args[0]);
            std::size_t top = c.size_param("max_degree", 2);
            auto cat = hochschild_cohomology_dims(m, top);
            auto alg = algebra_cohomology(m, top, c.size_param("cap", 200000));
            r.series.push_back({"H^n category complex", cat});
            r.series.push_back({"H^n algebra complex", alg});
            degree_verdicts(r, "category complex = algebra complex", cat, alg);
        } else if (key == "verify contraction") {
            run_contraction(c, r);
        } else if (key == "verify hom-embed") {
            const QuotientData& q = env_.quotient(c.args[0]);
            const GroupEntry& g = env_.group(env_.action(c.args[0]).group);
            HomEmbeddingReport h = verify_hom_embedding(q, g.presentation);
            r.facts.push_back({"group", env_.action(c.args[0]).group});
            verdict(r, "dim Hom(G, k+) <= dim H^1(B, B)", std::nullopt, h.hom_dim, "<=", h.h1_dim);
            verdict(r, "constant tuple is a 0-cocycle", std::nullopt, h.constant_is_cocycle ? 1 : 0, "=", 1);
            verdict(r, "dim H^0(C, L B) = 1 + radical part", std::nullopt, h.h0_dim, "=", 1 + h.radical_dim);
            verdict(r, "constant tuple outside the radical part", std::nullopt, h.splitting ? 1 : 0, "=", 1);
        } else if (key == "verify rank-bound") {
            const GroupEntry& g = env_.group(c.args[0]);
            const QuotientData* q = c.args.size() > 1 ? &env_.quotient(c.args[1]) : nullptr;
            RankBoundReport b = verify_rank_bound(g.presentation, q);
            r.series.push_back({"rank G", {b.rank}});
            if (b.h1_dim)
                verdict(r, "rank G <= dim H^1(B, B)", std::nullopt, b.rank, "<=", *b.h1_dim);
        } else {
            throw InputError("unknown command '" + key + "'");
        }
    }

private:
    const Environment& env_;

    void run_quotient(const Command& c, CommandReport& r)
    {
        const QuotientData& q = env_.quotient(c.args[0]);
        const LinearCategory& b = *q.quotient;
        const LinearCategory& cat = q.action.category();
        r.facts.push_back({"objects", join_names(b.object_names())});
        std::string orbits;
        for (const auto& o : q.orbits) {
            std::vector<std::string> names;
            for (auto x : o)
                names.push_back(cat.object_name(x));
            orbits += (orbits.empty() ? "" : " ") + ("{" + join_names(names) + "}");
        }
        r.facts.push_back({"orbits", orbits});
        Grid g{"dim hom(v, u), v down, u across", {}, {}};
        for (std::size_t v = 0; v < b.object_count(); ++v) {
            g.dims.emplace_back();
            for (std::size_t u = 0; u < b.object_count(); ++u)
                g.dims.back().push_back(b.hom_dim(v, u));
        }
        r.grids.push_back(g);
    }

    void run_pages(const Command& c, CommandReport& r)
    {
        const QuotientData& q = env_.quotient(c.args[0]);
        Bimodule m = c.args.size() > 1 ? env_.coefficients(c.args[1]) : standard(q.quotient);
        if (!(m.base() == *q.quotient))
            throw InputError("'" + c.args[1] + "' does not live over the quotient of '" + c.args[0] + "'");
        const std::size_t page = c.size_param("page", 2);
        const std::size_t P = c.size_param("P", 3), Q = c.size_param("Q", 3);
        const bool coh = c.param("kind", "homological") == "cohomological";
        const Filtration f = c.param("filtration", "columns") == "rows" ? Filtration::Rows : Filtration::Columns;
        r.facts.push_back({"kind", coh ? "cohomological (dual coefficients)" : "homological"});
        r.facts.push_back({"filtration", f == Filtration::Rows ? "rows" : "columns"});
        r.facts.push_back({"truncation", "P=" + std::to_string(P) + " Q=" + std::to_string(Q)});
        DoubleComplex d = cartan_leray_double_complex(q, coh ? dual(m) : m, P, Q);
        auto pages = spectral_pages(d, f, page);
        for (const auto& pg : pages)
            r.grids.push_back({"E" + std::to_string(pg.r), pg.dims, pg.reliable});
        r.series.push_back({"diagonal sums of E" + std::to_string(page), diagonal_sums(pages.back())});
    }

    void run_maschke(const Command& c, CommandReport& r)
    {
        const QuotientData& q = env_.quotient(c.args[0]);
        Bimodule m = c.args.size() > 1 ? env_.coefficients(c.args[1]) : standard(q.quotient);
        MaschkeReport mr = maschke_compare(q, m, c.size_param("n_max", 2));
        Series bh{"H_n(B, M)", {}}, ch{"H_n(C, L M)", {}}, co{"H_n(C, L M)/G", {}};
        Series bc{"H^n(B, M)", {}}, cc{"H^n(C, L M)", {}}, ci{"H^n(C, L M)^G", {}};
        for (const auto& d : mr.homology) {
            bh.dims.push_back(d.base);
            ch.dims.push_back(d.cover);
            co.dims.push_back(d.reduced);
        }
        for (const auto& d : mr.cohomology) {
            bc.dims.push_back(d.base);
            cc.dims.push_back(d.cover);
            ci.dims.push_back(d.reduced);
        }
        r.series = {bh, ch, co, bc, cc, ci};
        degree_verdicts(r, "H_n(B, M) = H_n(C, L M)/G", bh.dims, co.dims);
        degree_verdicts(r, "H^n(B, M) = H^n(C, L M)^G", bc.dims, ci.dims);
    }

    void run_duality(const Command& c, CommandReport& r)
    {
        const std::size_t top = c.size_param("n_max", 3);
        Bimodule y = env_.coefficients(c.args[0]);
        Bimodule dy = dual(y);
        auto h = hochschild_homology_dims(y, top);
        auto hd = hochschild_cohomology_dims(dy, top);
        auto h2 = hochschild_homology_dims(dy, top);
        auto hdd = hochschild_cohomology_dims(dual(dy), top);
        r.series = {{"H_n(Y)", h}, {"H^n(D Y)", hd}, {"H_n(D Y)", h2}, {"H^n(D D Y)", hdd}};
        degree_verdicts(r, "H_n(Y) = H^n(D Y)", h, hd);
        degree_verdicts(r, "H_n(D Y) = H^n(D D Y)", h2, hdd);
    }

    void run_contraction(const Command& c, CommandReport& r)
    {
        const CategoryPtr& cat = env_.category(c.args[0]).category;
        const std::size_t top = c.size_param("max_degree", 2);
        std::vector<std::size_t> members;
        std::string objects = c.param("objects", "");
        if (objects.empty()) {
            for (std::size_t x = 0; x < cat->object_count(); ++x)
                members.push_back(x);
        } else {
            std::set<std::size_t> seen;
            for (const auto& n : split_commas(objects)) {
                std::size_t x = cat->object_index(n);
                if (!seen.insert(x).second)
                    throw InputError("object '" + n + "' listed twice");
                members.push_back(x);
            }
            std::sort(members.begin(), members.end());
        }
        std::vector<std::string> names;
        for (auto x : members)
            names.push_back(cat->object_name(x));
        r.facts.push_back({"contracted", join_names(names)});

        auto small = share(contract(*cat, members));
        const std::size_t at = members.front();
        auto big = share(expand(*small, at, member_idempotents(*cat, members, *small, at), names));

        auto h = hochschild_cohomology_dims(standard(cat), top);
        auto hs = hochschild_cohomology_dims(standard(small), top);
        auto hb = hochschild_cohomology_dims(standard(big), top);
        auto l = hochschild_homology_dims(standard(cat), top);
        auto ls = hochschild_homology_dims(standard(small), top);
        auto lb = hochschild_homology_dims(standard(big), top);
        r.series = {{"H^n(C)", h}, {"H^n(contracted)", hs}, {"H^n(expanded)", hb},
                    {"H_n(C)", l}, {"H_n(contracted)", ls}, {"H_n(expanded)", lb}};
        degree_verdicts(r, "H^n(C) = H^n(contracted)", h, hs);
        degree_verdicts(r, "H^n(C) = H^n(expanded)", h, hb);
        degree_verdicts(r, "H_n(C) = H_n(contracted)", l, ls);
        degree_verdicts(r, "H_n(C) = H_n(expanded)", l, lb);

        const std::size_t n = cat->object_count();
        std::size_t matching = 0;
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t x = 0; x < n; ++x)
                if (big->hom_dim(big->object_index(cat->object_name(y)), big->object_index(cat->object_name(x))) ==
                    cat->hom_dim(y, x))
                    ++matching;
        verdict(r, "hom dims restored (pairs)", std::nullopt, matching, "=", n * n);
    }
};

} // namespace

CheckSummary check_job(const JobFile& job)
{
    Environment env(job);
    CheckSummary s = env.summary();
    s.commands = job.commands.size();
    return s;
}

Report run_job(const JobFile& job, const RunOptions& options)
{
    Environment env(job);
    Report report;
    report.input_digest = options.input_digest;
    report.field = job.field.name();
    Runner runner(env);
    for (std::size_t i = 0; i < job.commands.size(); ++i) {
        const Command& c = job.commands[i];
        CommandReport r;
        r.index = i;
        r.line = c.line.value;
        r.command = print_command(c);
        r.digest = fnv1a64(r.command);
        auto start = std::chrono::steady_clock::now();
        try {
            runner.run(c, r);
            if (r.verdicts.empty()) {
                r.status = Status::Ok;
            } else {
                bool all = true;
                for (const auto& v : r.verdicts)
                    all = all && v.pass;
                r.status = all ? Status::Pass : Status::Fail;
            }
        } catch (const std::exception& e) {
            r.status = Status::Error;
            r.series.clear();
            r.grids.clear();
            r.verdicts.clear();
            r.facts.clear();
            r.message = "line " + std::to_string(r.line) + ": " + c.title() + ": " + e.what();
        }
        if (options.timing)
            r.milliseconds =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report.commands.push_back(std::move(r));
    }
    return report;
}

} // namespace hmcl

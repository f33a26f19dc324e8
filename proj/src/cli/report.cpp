#include "hmcl/cli/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hmcl {

std::string fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

const char* to_string(CommandReport::Status s)
{
    switch (s) {
    case CommandReport::Status::Ok: return "ok";
    case CommandReport::Status::Pass: return "pass";
    case CommandReport::Status::Fail: return "fail";
    case CommandReport::Status::Error: return "error";
    }
    return "";
}

int Report::exit_code() const
{
    bool failed = false;
    for (const auto& c : commands) {
        if (c.status == CommandReport::Status::Error)
            return 2;
        failed = failed || c.status == CommandReport::Status::Fail;
    }
    return failed ? 1 : 0;
}

namespace {

using nlohmann::ordered_json;

struct Totals {
    std::size_t passed = 0, failed = 0, errors = 0;
};

Totals totals(const Report& r)
{
    Totals t;
    for (const auto& c : r.commands) {
        t.passed += c.status == CommandReport::Status::Pass;
        t.failed += c.status == CommandReport::Status::Fail;
        t.errors += c.status == CommandReport::Status::Error;
    }
    return t;
}

} // namespace

std::string to_json(const Report& r)
{
    ordered_json j;
    j["schema"] = report_schema;
    j["input_digest"] = r.input_digest;
    j["field"] = r.field;
    j["commands"] = ordered_json::array();
    for (const auto& c : r.commands) {
        ordered_json e;
        e["index"] = c.index;
        e["line"] = c.line;
        e["command"] = c.command;
        e["digest"] = c.digest;
        e["status"] = to_string(c.status);
        if (!c.facts.empty()) {
            ordered_json f = ordered_json::object();
            for (const auto& [k, v] : c.facts)
                f[k] = v;
            e["facts"] = f;
        }
        if (!c.series.empty()) {
            e["series"] = ordered_json::array();
            for (const auto& s : c.series)
                e["series"].push_back({{"name", s.name}, {"dims", s.dims}});
        }
        if (!c.grids.empty()) {
            e["grids"] = ordered_json::array();
            for (const auto& g : c.grids) {
                ordered_json gj;
                gj["name"] = g.name;
                gj["dims"] = g.dims;
                if (!g.reliable.empty())
                    gj["reliable"] = g.reliable;
                e["grids"].push_back(gj);
            }
        }
        if (!c.verdicts.empty()) {
            e["verdicts"] = ordered_json::array();
            for (const auto& v : c.verdicts) {
                ordered_json vj;
                vj["check"] = v.check;
                vj["degree"] = v.degree ? ordered_json(*v.degree) : ordered_json(nullptr);
                vj["lhs"] = v.lhs;
                vj["relation"] = v.relation;
                vj["rhs"] = v.rhs;
                vj["pass"] = v.pass;
                e["verdicts"].push_back(vj);
            }
        }
        if (c.status == CommandReport::Status::Error)
            e["message"] = c.message;
        if (c.milliseconds)
            e["milliseconds"] = *c.milliseconds;
        j["commands"].push_back(e);
    }
    Totals t = totals(r);
    j["summary"] = {{"commands", r.commands.size()},
                    {"passed", t.passed},
                    {"failed", t.failed},
                    {"errors", t.errors},
                    {"exit_code", r.exit_code()}};
    return j.dump(2) + "\n";
}

namespace {

// Left-aligned columns separated by two spaces.
void table(std::ostream& os, const std::vector<std::vector<std::string>>& rows, const std::string& indent)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line = indent;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
}

} // namespace

std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << "hmcl report (" << report_schema << ")\n";
    os << "input digest  " << r.input_digest << "\n";
    os << "field         " << r.field << "\n";
    for (const auto& c : r.commands) {
        os << "\n[" << c.index + 1 << "] line " << c.line << ": " << c.command << "\n";
        os << "    status: " << to_string(c.status);
        if (c.milliseconds) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", *c.milliseconds);
            os << "  (" << buf << " ms)";
        }
        os << "\n";
        if (c.status == CommandReport::Status::Error) {
            os << "    " << c.message << "\n";
            continue;
        }
        if (!c.facts.empty()) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [k, v] : c.facts)
                rows.push_back({k, v});
            table(os, rows, "    ");
        }
        if (!c.series.empty()) {
            std::size_t len = 0;
            for (const auto& s : c.series)
                len = std::max(len, s.dims.size());
            std::vector<std::vector<std::string>> rows;
            rows.push_back({"n"});
            for (std::size_t n = 0; n < len; ++n)
                rows[0].push_back(std::to_string(n));
            for (const auto& s : c.series) {
                rows.push_back({s.name});
                for (auto d : s.dims)
                    rows.back().push_back(std::to_string(d));
            }
            table(os, rows, "    ");
        }
        for (const auto& g : c.grids) {
            os << "    " << g.name;
            if (!g.reliable.empty())
                os << " (q up, p across; * outside the reliable window)";
            os << "\n";
            if (g.dims.empty())
                continue;
            const std::size_t Q = g.dims[0].size();
            std::vector<std::vector<std::string>> rows;
            if (g.reliable.empty()) {
                rows.push_back({""});
                for (std::size_t q = 0; q < Q; ++q)
                    rows[0].push_back(std::to_string(q));
                for (std::size_t p = 0; p < g.dims.size(); ++p) {
                    rows.push_back({std::to_string(p)});
                    for (auto d : g.dims[p])
                        rows.back().push_back(std::to_string(d));
                }
            } else {
                for (std::size_t q = Q; q-- > 0;) {
                    rows.push_back({"q=" + std::to_string(q)});
                    for (std::size_t p = 0; p < g.dims.size(); ++p)
                        rows.back().push_back(std::to_string(g.dims[p][q]) + (g.reliable[p][q] ? "" : "*"));
                }
                rows.push_back({""});
                for (std::size_t p = 0; p < g.dims.size(); ++p)
                    rows.back().push_back("p=" + std::to_string(p));
            }
            table(os, rows, "      ");
        }
        if (!c.verdicts.empty()) {
            std::vector<std::vector<std::string>> rows = {{"check", "n", "lhs", "", "rhs", "result"}};
            for (const auto& v : c.verdicts)
                rows.push_back({v.check, v.degree ? std::to_string(*v.degree) : "-", std::to_string(v.lhs),
                                v.relation, std::to_string(v.rhs), v.pass ? "PASS" : "FAIL"});
            table(os, rows, "    ");
        }
    }
    Totals t = totals(r);
    os << "\ncommands " << r.commands.size() << ", passed " << t.passed << ", failed " << t.failed << ", errors "
       << t.errors << ", exit code " << r.exit_code() << "\n";
    return os.str();
}

} // namespace hmcl

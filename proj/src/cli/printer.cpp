#include "hmcl/cli/job.hpp"

#include <cctype>
#include <sstream>

namespace hmcl {

namespace {

std::string name(const std::string& s)
{
    bool plain = !s.empty();
    for (char c : s)
        plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'');
    return plain ? s : "\"" + s + "\"";
}

std::string join(const std::vector<std::string>& xs, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + name(xs[i]);
    return out;
}

// Coefficient written before a path: "" for 1, "2 " or "1/3 ".
std::string magnitude_prefix(const mpq_class& q)
{
    mpq_class a = abs(q);
    return a == 1 ? "" : a.get_str() + " ";
}

std::string relation_text(const Relation& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        const PathTerm& t = r.terms[i];
        bool negative = sgn(t.coefficient) < 0;
        if (i > 0)
            out += negative ? " - " : " + ";
        else if (negative)
            out += "-";
        out += magnitude_prefix(t.coefficient);
        if (t.arrows.empty())
            out += name("1_" + t.vertex);
        else
            out += join(t.arrows, "*");
    }
    return out;
}

std::string word_text(const GroupPresentation& p, const GroupWord& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "*" : "") + name(p.generators.at(w[i].first));
        if (w[i].second != 1)
            out += "^" + std::to_string(w[i].second);
    }
    return out;
}

void print(std::ostream& os, const CategoryDecl& d)
{
    if (d.is_quotient()) {
        os << "category " << name(d.name) << " = quotient(" << name(d.quotient_of) << ")\n";
        return;
    }
    const QuiverPresentation& q = d.presentation;
    os << "category " << name(d.name) << " {\n";
    os << "  objects: " << join(q.vertices, ", ") << "\n";
    if (!q.arrows.empty()) {
        os << "  arrows: ";
        for (std::size_t i = 0; i < q.arrows.size(); ++i)
            os << (i ? ", " : "") << name(q.arrows[i].name) << ": " << name(q.arrows[i].source) << " -> "
               << name(q.arrows[i].target);
        os << "\n";
    }
    if (!q.relations.empty()) {
        os << "  relations: ";
        for (std::size_t i = 0; i < q.relations.size(); ++i)
            os << (i ? ", " : "") << relation_text(q.relations[i]);
        os << "\n";
    }
    if (q.nilpotence_bound)
        os << "  nilpotence: " << *q.nilpotence_bound << "\n";
    os << "}\n";
}

void print(std::ostream& os, const GroupDecl& g)
{
    os << "group " << name(g.name) << " = ";
    switch (g.kind) {
    case GroupDecl::Kind::Cyclic:
        os << "cyclic(" << g.order << ")\n";
        break;
    case GroupDecl::Kind::Table:
        os << "table(" << join(g.elements, ", ") << ") {\n";
        for (const auto& row : g.rows)
            os << "  " << join(row, " ") << "\n";
        os << "}\n";
        break;
    case GroupDecl::Kind::Presentation: {
        const GroupPresentation& p = g.presentation;
        os << "presentation <" << join(p.generators, ", ") << " |";
        for (std::size_t i = 0; i < p.relators.size(); ++i)
            os << (i ? ", " : " ") << word_text(p, p.relators[i]);
        os << ">\n";
        break;
    }
    case GroupDecl::Kind::Product:
        os << "product(" << join(g.factors, ", ") << ")\n";
        break;
    }
}

void print(std::ostream& os, const ActionDecl& a)
{
    os << "action " << name(a.name) << " = " << name(a.group) << " on " << name(a.category) << " {\n";
    for (const auto& gen : a.generators) {
        os << "  " << name(gen.element) << ":";
        for (std::size_t i = 0; i < gen.items.size(); ++i) {
            const MapItem& m = gen.items[i];
            os << (i ? ", " : " ") << name(m.from) << " -> ";
            if (m.coefficient != 1)
                os << m.coefficient.get_str() << " ";
            os << name(m.to);
        }
        os << "\n";
    }
    os << "}\n";
}

void print(std::ostream& os, const BimoduleDecl& b)
{
    static const char* kinds[] = {"standard", "lift", "dual", "tensor"};
    os << "bimodule " << name(b.name) << " = " << kinds[static_cast<int>(b.kind)] << "(" << join(b.args, ", ")
       << ")\n";
}

} // namespace

std::string print_command(const Command& c)
{
    std::string out = "run " + c.name;
    if (!c.check.empty())
        out += " " + c.check;
    for (const auto& a : c.args)
        out += " " + name(a);
    for (const auto& [k, v] : c.params)
        out += " " + k + "=" + v;
    return out;
}

std::string print_job(const JobFile& j)
{
    std::ostringstream os;
    os << "field " << (j.field.is_rationals() ? std::string("Q") : "GF(" + std::to_string(j.field.characteristic()) + ")")
       << "\n";
    for (const auto& d : j.declarations) {
        os << "\n";
        std::visit([&](const auto& x) { print(os, x); }, d);
    }
    if (!j.commands.empty())
        os << "\n";
    for (const auto& c : j.commands)
        os << print_command(c) << "\n";
    return os.str();
}

} // namespace hmcl

#include "hmcl/cli/job.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace hmcl {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

std::string Command::param(const std::string& key, const std::string& fallback) const
{
    for (const auto& [k, v] : params)
        if (k == key)
            return v;
    return fallback;
}

std::size_t Command::size_param(const std::string& key, std::size_t fallback) const
{
    for (const auto& [k, v] : params)
        if (k == key)
            return std::stoul(v);
    return fallback;
}

namespace {

template <class T>
std::size_t count_of(const std::vector<Declaration>& ds)
{
    std::size_t n = 0;
    for (const auto& d : ds)
        n += std::holds_alternative<T>(d);
    return n;
}

} // namespace

std::size_t JobFile::category_count() const { return count_of<CategoryDecl>(declarations); }
std::size_t JobFile::group_count() const { return count_of<GroupDecl>(declarations); }
std::size_t JobFile::action_count() const { return count_of<ActionDecl>(declarations); }
std::size_t JobFile::bimodule_count() const { return count_of<BimoduleDecl>(declarations); }

namespace {

enum class Tok { Word, Punct, Newline, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t end_column = 0; // one past the last character
    bool quoted = false;
};

bool word_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto push = [&](Tok k, std::string t, std::size_t c0, std::size_t c1, bool q = false) {
        out.push_back({k, std::move(t), line, c0, c1, q});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            push(Tok::Newline, "\n", col, col + 1);
            ++line;
            col = 1;
            ++i;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == '"') {
            std::size_t start = col, j = i + 1;
            while (j < text.size() && text[j] != '"' && text[j] != '\n')
                ++j;
            if (j >= text.size() || text[j] != '"')
                throw ParseError(line, start, "unterminated quoted name");
            std::string body(text.substr(i + 1, j - i - 1));
            if (body.empty())
                throw ParseError(line, start, "empty quoted name");
            col += j + 1 - i;
            i = j + 1;
            push(Tok::Word, body, start, col, true);
        } else if (word_char(c)) {
            std::size_t start = col, j = i;
            while (j < text.size() && word_char(text[j]))
                ++j;
            col += j - i;
            push(Tok::Word, std::string(text.substr(i, j - i)), start, col);
            i = j;
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Tok::Punct, "->", col, col + 2);
            i += 2;
            col += 2;
        } else if (std::string_view("{}()<>|,;:=*^-+/").find(c) != std::string_view::npos) {
            push(Tok::Punct, std::string(1, c), col, col + 1);
            ++i;
            ++col;
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", line, col, col, false});
    return out;
}

bool all_digits(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

enum class Sym { Category, Group, Action, Bimodule };

const char* sym_name(Sym s)
{
    switch (s) {
    case Sym::Category: return "a category";
    case Sym::Group: return "a group";
    case Sym::Action: return "an action";
    case Sym::Bimodule: return "a bimodule";
    }
    return "";
}

struct CommandShape {
    std::vector<std::vector<Sym>> args; // allowed kinds per position
    std::size_t required = 1;
    std::vector<std::string> params;
};

const std::map<std::string, CommandShape>& command_shapes()
{
    static const std::map<std::string, CommandShape> shapes = {
        {"hh", {{{Sym::Bimodule, Sym::Category}}, 1, {"max_degree"}}},
        {"cohh", {{{Sym::Bimodule, Sym::Category}}, 1, {"max_degree"}}},
        {"center", {{{Sym::Category}}, 1, {}}},
        {"quotient", {{{Sym::Action}}, 1, {}}},
        {"cl-pages", {{{Sym::Action}, {Sym::Bimodule}}, 1, {"page", "filtration", "P", "Q", "kind"}}},
        {"verify maschke", {{{Sym::Action}, {Sym::Bimodule}}, 1, {"n_max"}}},
        {"verify duality", {{{Sym::Bimodule, Sym::Category}}, 1, {"n_max"}}},
        {"verify agreement", {{{Sym::Bimodule, Sym::Category}}, 1, {"max_degree", "cap"}}},
        {"verify contraction", {{{Sym::Category}}, 1, {"max_degree", "objects"}}},
        {"verify hom-embed", {{{Sym::Action}}, 1, {}}},
        {"verify rank-bound", {{{Sym::Group}, {Sym::Action}}, 1, {}}},
    };
    return shapes;
}

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    JobFile run()
    {
        JobFile job;
        bool have_field = false;
        for (;;) {
            skip_newlines();
            if (peek().kind == Tok::End)
                break;
            const Token& kw = peek();
            if (kw.kind != Tok::Word)
                fail(kw, "expected a statement");
            if (kw.text == "field") {
                if (have_field)
                    fail(kw, "field declared twice");
                next();
                job.field = parse_field();
                have_field = true;
            } else if (kw.text == "category" || kw.text == "group" || kw.text == "action" ||
                       kw.text == "bimodule" || kw.text == "run") {
                if (!have_field)
                    fail(kw, "no field declared");
                next();
                if (kw.text == "category")
                    job.declarations.push_back(parse_category(kw.line));
                else if (kw.text == "group")
                    job.declarations.push_back(parse_group(kw.line));
                else if (kw.text == "action")
                    job.declarations.push_back(parse_action(kw.line));
                else if (kw.text == "bimodule")
                    job.declarations.push_back(parse_bimodule(kw.line));
                else
                    job.commands.push_back(parse_run(kw.line));
            } else {
                fail(kw, "unknown statement '" + kw.text + "'");
            }
            end_statement();
        }
        if (!have_field)
            throw ParseError(1, 1, "no field declared");
        return job;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, std::pair<Sym, std::size_t>> symbols_;

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] static void fail(const Token& t, const std::string& msg)
    {
        throw ParseError(t.line, t.column, msg);
    }

    bool at(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
    bool at_word(const char* w) const { return peek().kind == Tok::Word && !peek().quoted && peek().text == w; }

    const Token& expect(const char* punct)
    {
        if (!at(punct))
            fail(peek(), std::string("expected '") + punct + "'" + found());
        return next();
    }

    std::string found() const
    {
        const Token& t = peek();
        if (t.kind == Tok::End)
            return " before end of input";
        if (t.kind == Tok::Newline)
            return " before end of line";
        return " but found '" + t.text + "'";
    }

    const Token& word(const char* what)
    {
        if (peek().kind != Tok::Word)
            fail(peek(), std::string("expected ") + what + found());
        return next();
    }

    void keyword(const char* w)
    {
        if (!at_word(w))
            fail(peek(), std::string("expected '") + w + "'" + found());
        next();
    }

    void skip_newlines()
    {
        while (peek().kind == Tok::Newline)
            next();
    }

    void end_statement()
    {
        if (peek().kind != Tok::Newline && peek().kind != Tok::End)
            fail(peek(), "expected end of line" + found());
    }

    std::size_t number(const char* what)
    {
        const Token& t = word(what);
        if (t.quoted || !all_digits(t.text) || t.text.size() > 9)
            fail(t, std::string("expected ") + what);
        return std::stoul(t.text);
    }

    // integer or a/b, optionally negative
    mpq_class scalar()
    {
        bool negative = false;
        if (at("-")) {
            next();
            negative = true;
        }
        const Token& a = word("a scalar");
        if (a.quoted || !all_digits(a.text))
            fail(a, "expected a scalar");
        std::string s = a.text;
        if (at("/")) {
            next();
            const Token& b = word("a denominator");
            if (b.quoted || !all_digits(b.text))
                fail(b, "expected a denominator");
            if (mpz_class(b.text) == 0)
                fail(b, "zero denominator");
            s += "/" + b.text;
        }
        mpq_class q(s);
        q.canonicalize();
        return negative ? mpq_class(-q) : q;
    }

    void declare(const Token& name, Sym kind)
    {
        auto it = symbols_.find(name.text);
        if (it != symbols_.end())
            fail(name, "duplicate name '" + name.text + "' (first declared on line " +
                           std::to_string(it->second.second) + ")");
        symbols_[name.text] = {kind, name.line};
    }

    std::string reference(const std::vector<Sym>& kinds)
    {
        const Token& t = word("a name");
        auto it = symbols_.find(t.text);
        if (it == symbols_.end())
            fail(t, "unknown identifier '" + t.text + "'");
        for (Sym k : kinds)
            if (it->second.first == k)
                return t.text;
        std::string want;
        for (std::size_t i = 0; i < kinds.size(); ++i)
            want += (i ? " or " : "") + std::string(sym_name(kinds[i]));
        fail(t, "'" + t.text + "' is " + sym_name(it->second.first) + ", expected " + want);
    }

    // Separator inside a block: ';' or newlines. Returns false at '}'.
    bool block_separator()
    {
        bool any = false;
        while (at(";") || peek().kind == Tok::Newline) {
            next();
            any = true;
        }
        if (at("}"))
            return false;
        if (!any)
            fail(peek(), "expected ';', a new line or '}'" + found());
        return true;
    }

    Field parse_field()
    {
        const Token& t = word("Q or GF(p)");
        if (!t.quoted && t.text == "Q")
            return Field::rationals();
        if (t.quoted || t.text != "GF")
            fail(t, "expected Q or GF(p)");
        expect("(");
        const Token& p = peek();
        std::size_t v = number("a prime");
        if (!is_prime(v))
            fail(p, std::to_string(v) + " is not prime");
        expect(")");
        return Field::prime(v);
    }

    template <class F>
    void comma_list(F item)
    {
        if (peek().kind != Tok::Word && !at("-"))
            return;
        item();
        while (at(",")) {
            next();
            item();
        }
    }

    CategoryDecl parse_category(std::size_t line)
    {
        CategoryDecl d;
        const Token& name = word("a category name");
        d.name = name.text;
        d.line.value = line;
        expect_or_block(d, name);
        declare(name, Sym::Category);
        return d;
    }

    void expect_or_block(CategoryDecl& d, const Token& name)
    {
        if (at("=")) {
            next();
            keyword("quotient");
            expect("(");
            d.quotient_of = reference({Sym::Action});
            expect(")");
            return;
        }
        expect("{");
        QuiverPresentation& q = d.presentation;
        std::vector<std::pair<Token, Relation>> raw;
        bool saw_nilpotence = false;
        skip_separators();
        while (!at("}")) {
            const Token& key = word("objects, arrows, relations or nilpotence");
            expect(":");
            if (key.text == "objects") {
                comma_list([&] { q.vertices.push_back(word("an object name").text); });
            } else if (key.text == "arrows") {
                comma_list([&] {
                    Arrow a;
                    a.name = word("an arrow name").text;
                    expect(":");
                    a.source = word("a source object").text;
                    expect("->");
                    a.target = word("a target object").text;
                    q.arrows.push_back(a);
                });
            } else if (key.text == "relations") {
                comma_list([&] {
                    Token start = peek();
                    raw.push_back({start, relation()});
                });
            } else if (key.text == "nilpotence") {
                if (saw_nilpotence)
                    fail(key, "nilpotence given twice");
                saw_nilpotence = true;
                q.nilpotence_bound = static_cast<unsigned>(number("a nilpotence bound"));
            } else {
                fail(key, "unknown section '" + key.text + "'");
            }
            if (!block_separator())
                break;
        }
        expect("}");

        std::set<std::string> arrow_names, vertex_names(q.vertices.begin(), q.vertices.end());
        for (const auto& a : q.arrows)
            arrow_names.insert(a.name);
        for (auto& [tok, r] : raw) {
            for (auto& t : r.terms)
                if (t.arrows.size() == 1 && !arrow_names.count(t.arrows[0]) && t.arrows[0].rfind("1_", 0) == 0 &&
                    vertex_names.count(t.arrows[0].substr(2))) {
                    t.vertex = t.arrows[0].substr(2);
                    t.arrows.clear();
                }
            q.relations.push_back(r);
        }
        try {
            q.validate();
        } catch (const InputError& e) {
            throw ParseError(name.line, name.column, "category '" + name.text + "': " + e.what());
        }
    }

    void skip_separators()
    {
        while (at(";") || peek().kind == Tok::Newline)
            next();
    }

    Relation relation()
    {
        Relation r;
        bool first = true;
        for (;;) {
            mpq_class sign = 1;
            if (at("+") || at("-")) {
                if (at("-"))
                    sign = -1;
                next();
            } else if (!first) {
                break;
            }
            mpq_class c = 1;
            const Token& t = peek();
            if (t.kind == Tok::Word && !t.quoted && all_digits(t.text) &&
                ((peek(1).kind == Tok::Punct && peek(1).text == "/") || peek(1).kind == Tok::Word))
                c = scalar();
            PathTerm term;
            term.coefficient = sign * c;
            term.arrows.push_back(word("a path").text);
            while (at("*")) {
                next();
                term.arrows.push_back(word("an arrow").text);
            }
            r.terms.push_back(term);
            first = false;
        }
        return r;
    }

    GroupDecl parse_group(std::size_t line)
    {
        GroupDecl g;
        const Token& name = word("a group name");
        g.name = name.text;
        g.line.value = line;
        expect("=");
        const Token& kind = word("cyclic, table, presentation or product");
        if (kind.quoted)
            fail(kind, "expected cyclic, table, presentation or product");
        if (kind.text == "cyclic") {
            g.kind = GroupDecl::Kind::Cyclic;
            expect("(");
            const Token& n = peek();
            g.order = number("a group order");
            if (g.order == 0)
                fail(n, "a cyclic group needs positive order");
            expect(")");
        } else if (kind.text == "table") {
            g.kind = GroupDecl::Kind::Table;
            expect("(");
            comma_list([&] { g.elements.push_back(word("an element name").text); });
            expect(")");
            std::set<std::string> known(g.elements.begin(), g.elements.end());
            if (known.size() != g.elements.size())
                fail(kind, "repeated element name in group table");
            expect("{");
            skip_separators();
            while (!at("}")) {
                std::vector<std::string> row;
                while (peek().kind == Tok::Word || at(",")) {
                    if (at(",")) {
                        next();
                        continue;
                    }
                    const Token& e = next();
                    if (!known.count(e.text))
                        fail(e, "unknown group element '" + e.text + "'");
                    row.push_back(e.text);
                }
                if (row.size() != g.elements.size())
                    fail(peek(), "table row " + std::to_string(g.rows.size() + 1) + " has " +
                                     std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(g.elements.size()));
                g.rows.push_back(row);
                if (!block_separator())
                    break;
            }
            const Token& close = expect("}");
            if (g.rows.size() != g.elements.size())
                fail(close, "group table has " + std::to_string(g.rows.size()) + " rows, expected " +
                                std::to_string(g.elements.size()));
        } else if (kind.text == "presentation") {
            g.kind = GroupDecl::Kind::Presentation;
            expect("<");
            skip_newlines();
            std::map<std::string, std::size_t> gens;
            comma_list([&] {
                const Token& t = word("a generator");
                if (!gens.emplace(t.text, gens.size()).second)
                    fail(t, "repeated generator '" + t.text + "'");
                g.presentation.generators.push_back(t.text);
            });
            skip_newlines();
            if (at("|")) {
                next();
                skip_newlines();
                comma_list([&] {
                    GroupWord w;
                    for (;;) {
                        const Token& t = word("a generator");
                        auto it = gens.find(t.text);
                        if (it == gens.end())
                            fail(t, "unknown generator '" + t.text + "'");
                        long e = 1;
                        if (at("^")) {
                            next();
                            bool neg = false;
                            if (at("-")) {
                                next();
                                neg = true;
                            }
                            e = static_cast<long>(number("an exponent"));
                            if (neg)
                                e = -e;
                        }
                        w.push_back({it->second, e});
                        if (!at("*"))
                            break;
                        next();
                    }
                    g.presentation.relators.push_back(w);
                    skip_newlines();
                });
                skip_newlines();
            }
            expect(">");
        } else if (kind.text == "product") {
            g.kind = GroupDecl::Kind::Product;
            expect("(");
            g.factors.push_back(reference({Sym::Group}));
            expect(",");
            g.factors.push_back(reference({Sym::Group}));
            expect(")");
        } else {
            fail(kind, "expected cyclic, table, presentation or product");
        }
        declare(name, Sym::Group);
        return g;
    }

    ActionDecl parse_action(std::size_t line)
    {
        ActionDecl a;
        const Token& name = word("an action name");
        a.name = name.text;
        a.line.value = line;
        expect("=");
        a.group = reference({Sym::Group});
        keyword("on");
        a.category = reference({Sym::Category});
        expect("{");
        skip_separators();
        std::set<std::string> seen;
        while (!at("}")) {
            // `g: objects; arrows` continues the same generator after ';'
            const bool continued = !a.generators.empty() && peek().kind == Tok::Word &&
                                   peek(1).kind == Tok::Punct && peek(1).text == "->";
            ActionGenerator fresh;
            if (!continued) {
                const Token& el = word("a group element");
                if (!seen.insert(el.text).second)
                    fail(el, "generator '" + el.text + "' given twice");
                fresh.element = el.text;
                expect(":");
                a.generators.push_back(fresh);
            }
            ActionGenerator& gen = a.generators.back();
            comma_list([&] {
                MapItem m;
                m.from = word("an object or arrow").text;
                expect("->");
                const Token& t = peek();
                if (t.kind == Tok::Word && !t.quoted && all_digits(t.text) &&
                    ((peek(1).kind == Tok::Punct && peek(1).text == "/") || peek(1).kind == Tok::Word))
                    m.coefficient = scalar();
                else if (at("-"))
                    m.coefficient = scalar();
                m.to = word("an object or arrow").text;
                gen.items.push_back(m);
            });
            if (!block_separator())
                break;
        }
        expect("}");
        declare(name, Sym::Action);
        return a;
    }

    BimoduleDecl parse_bimodule(std::size_t line)
    {
        BimoduleDecl b;
        const Token& name = word("a bimodule name");
        b.name = name.text;
        b.line.value = line;
        expect("=");
        const Token& kind = word("standard, lift, dual or tensor");
        expect("(");
        if (!kind.quoted && kind.text == "standard") {
            b.kind = BimoduleDecl::Kind::Standard;
            b.args.push_back(reference({Sym::Category}));
        } else if (!kind.quoted && kind.text == "lift") {
            b.kind = BimoduleDecl::Kind::Lift;
            b.args.push_back(reference({Sym::Action}));
            expect(",");
            b.args.push_back(reference({Sym::Bimodule}));
        } else if (!kind.quoted && kind.text == "dual") {
            b.kind = BimoduleDecl::Kind::Dual;
            b.args.push_back(reference({Sym::Bimodule}));
        } else if (!kind.quoted && kind.text == "tensor") {
            b.kind = BimoduleDecl::Kind::Tensor;
            b.args.push_back(reference({Sym::Bimodule}));
            expect(",");
            b.args.push_back(reference({Sym::Bimodule}));
        } else {
            fail(kind, "expected standard, lift, dual or tensor");
        }
        expect(")");
        declare(name, Sym::Bimodule);
        return b;
    }

    // Tokens written without spaces between them form one chunk, so
    // `cl-pages` and `objects=x,y` are single chunks.
    std::optional<std::pair<Token, std::string>> chunk()
    {
        if (peek().kind == Tok::Newline || peek().kind == Tok::End)
            return std::nullopt;
        Token first = next();
        std::string text = first.text;
        std::size_t end = first.end_column;
        while (peek().kind != Tok::Newline && peek().kind != Tok::End && peek().line == first.line &&
               peek().column == end) {
            const Token& t = next();
            text += t.text;
            end = t.end_column;
        }
        return std::pair{first, text};
    }

    Command parse_run(std::size_t line)
    {
        Command c;
        c.line.value = line;
        auto head = chunk();
        if (!head)
            fail(peek(), "expected a command");
        c.name = head->second;
        std::string key = c.name;
        Token at_tok = head->first;
        if (c.name == "verify") {
            auto kind = chunk();
            if (!kind)
                fail(peek(), "expected a verification kind");
            c.check = kind->second;
            key += " " + c.check;
            at_tok = kind->first;
        }
        auto shape_it = command_shapes().find(key);
        if (shape_it == command_shapes().end())
            fail(at_tok, "unknown command '" + key + "'");
        const CommandShape& shape = shape_it->second;

        while (auto ch = chunk()) {
            const auto& [tok, text] = *ch;
            auto eq = text.find('=');
            if (eq != std::string::npos && !tok.quoted) {
                std::string k = text.substr(0, eq), v = text.substr(eq + 1);
                bool known = false;
                for (const auto& p : shape.params)
                    known = known || p == k;
                if (!known)
                    fail(tok, "unknown parameter '" + k + "' for " + key);
                for (const auto& [k2, v2] : c.params)
                    if (k2 == k)
                        fail(tok, "parameter '" + k + "' given twice");
                check_param(tok, k, v);
                c.params.push_back({k, v});
                continue;
            }
            if (!c.params.empty())
                fail(tok, "positional arguments must precede parameters");
            if (c.args.size() >= shape.args.size())
                fail(tok, "too many arguments for " + key);
            const auto& kinds = shape.args[c.args.size()];
            auto it = symbols_.find(text);
            if (it == symbols_.end())
                fail(tok, "unknown identifier '" + text + "'");
            bool ok = false;
            for (Sym k : kinds)
                ok = ok || it->second.first == k;
            if (!ok) {
                std::string want;
                for (std::size_t i = 0; i < kinds.size(); ++i)
                    want += (i ? " or " : "") + std::string(sym_name(kinds[i]));
                fail(tok, "'" + text + "' is " + sym_name(it->second.first) + ", expected " + want);
            }
            c.args.push_back(text);
        }
        if (c.args.size() < shape.required)
            fail(at_tok, key + " needs " + std::to_string(shape.required) + " argument(s)");
        return c;
    }

    void check_param(const Token& tok, const std::string& k, const std::string& v)
    {
        if (k == "filtration") {
            if (v != "columns" && v != "rows")
                fail(tok, "filtration must be columns or rows");
        } else if (k == "kind") {
            if (v != "homological" && v != "cohomological")
                fail(tok, "kind must be homological or cohomological");
        } else if (k == "objects") {
            if (v.empty() || v.front() == ',' || v.back() == ',' || v.find(",,") != std::string::npos)
                fail(tok, "objects must be a comma separated list of names");
        } else {
            if (!all_digits(v) || v.size() > 9)
                fail(tok, "parameter '" + k + "' must be a non-negative integer");
            if ((k == "P" || k == "Q") && std::stoul(v) == 0)
                fail(tok, "parameter '" + k + "' must be positive");
        }
    }
};

} // namespace

JobFile parse_job(std::string_view text)
{
    return Parser(text).run();
}

} // namespace hmcl

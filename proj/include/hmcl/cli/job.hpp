#pragma once

#include "hmcl/covering/group.hpp"
#include "hmcl/error.hpp"
#include "hmcl/lincat/presentation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hmcl {

// Source line of a declaration or command. Positions do not take part in
// comparisons, so a printed and reparsed job compares equal to the original.
struct SourceLine {
    std::size_t value = 0;
    friend bool operator==(SourceLine, SourceLine) { return true; }
};

class ParseError : public InputError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Either a presented category or the quotient of an action (quotient_of set).
struct CategoryDecl {
    std::string name;
    QuiverPresentation presentation;
    std::string quotient_of;
    SourceLine line;
    bool is_quotient() const { return !quotient_of.empty(); }
    friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

struct GroupDecl {
    enum class Kind { Cyclic, Table, Presentation, Product };
    std::string name;
    Kind kind = Kind::Cyclic;
    std::size_t order = 0;                      // cyclic
    std::vector<std::string> elements;          // table
    std::vector<std::vector<std::string>> rows; // table: rows[a][b] = a * b
    GroupPresentation presentation;             // presentation
    std::vector<std::string> factors;           // product
    SourceLine line;
    friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

// from -> coefficient * to; objects always carry coefficient 1.
struct MapItem {
    std::string from;
    mpq_class coefficient = 1;
    std::string to;
    friend bool operator==(const MapItem&, const MapItem&) = default;
};

struct ActionGenerator {
    std::string element;
    std::vector<MapItem> items;
    friend bool operator==(const ActionGenerator&, const ActionGenerator&) = default;
};

struct ActionDecl {
    std::string name;
    std::string group;
    std::string category;
    std::vector<ActionGenerator> generators;
    SourceLine line;
    friend bool operator==(const ActionDecl&, const ActionDecl&) = default;
};

struct BimoduleDecl {
    enum class Kind { Standard, Lift, Dual, Tensor };
    std::string name;
    Kind kind = Kind::Standard;
    std::vector<std::string> args;
    SourceLine line;
    friend bool operator==(const BimoduleDecl&, const BimoduleDecl&) = default;
};

using Declaration = std::variant<CategoryDecl, GroupDecl, ActionDecl, BimoduleDecl>;

// `run NAME [CHECK] ARGS... key=value...`; check is set for `verify`.
struct Command {
    std::string name;
    std::string check;
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> params;
    SourceLine line;

    // Parameter value or the fallback.
    std::string param(const std::string& key, const std::string& fallback) const;
    std::size_t size_param(const std::string& key, std::size_t fallback) const;
    std::string title() const { return check.empty() ? name : name + " " + check; }
    friend bool operator==(const Command&, const Command&) = default;
};

struct JobFile {
    Field field;
    std::vector<Declaration> declarations;
    std::vector<Command> commands;

    std::size_t category_count() const;
    std::size_t group_count() const;
    std::size_t action_count() const;
    std::size_t bimodule_count() const;
    friend bool operator==(const JobFile&, const JobFile&) = default;
};

// Throws ParseError (with line and column) on syntax errors, unknown or
// mistyped identifiers, duplicate names and malformed command parameters.
JobFile parse_job(std::string_view text);

// Canonical text; parse_job(print_job(j)) == j.
std::string print_job(const JobFile& j);
std::string print_command(const Command& c);

} // namespace hmcl

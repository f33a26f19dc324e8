#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hmcl {

inline constexpr const char* report_schema = "hmcl-report/1";

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

// degree -> dim
struct Series {
    std::string name;
    std::vector<std::size_t> dims;
};

// (p, q) -> dim, with an optional reliability mask of the same shape.
struct Grid {
    std::string name;
    std::vector<std::vector<std::size_t>> dims; // [p][q]
    std::vector<std::vector<bool>> reliable;    // empty when not applicable
};

struct Verdict {
    std::string check;
    std::optional<std::size_t> degree;
    long long lhs = 0;
    std::string relation = "=";
    long long rhs = 0;
    bool pass = false;
};

struct CommandReport {
    enum class Status { Ok, Pass, Fail, Error };
    std::size_t index = 0;
    std::size_t line = 0;
    std::string command;             // canonical text of the run line
    std::string digest;              // fnv1a64 of `command`
    Status status = Status::Ok;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<Series> series;
    std::vector<Grid> grids;
    std::vector<Verdict> verdicts;
    std::string message;             // error text
    std::optional<double> milliseconds;
};

const char* to_string(CommandReport::Status s);

struct Report {
    std::string input_digest;
    std::string field;
    std::vector<CommandReport> commands;
    // 2 if a command raised an error, else 1 if a verification failed, else 0.
    int exit_code() const;
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

} // namespace hmcl

#include "hmcl/cli/run.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int input_error = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw hmcl::InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& path, const std::string& out, const std::string& format, bool timing)
{
    std::string text = read_file(path);
    hmcl::JobFile job = hmcl::parse_job(text);
    hmcl::Report report = hmcl::run_job(job, {hmcl::fnv1a64(text), timing});
    std::string rendered = format == "text" ? hmcl::to_text(report) : hmcl::to_json(report);
    if (out.empty() || out == "-") {
        std::cout << rendered;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os || !(os << rendered))
            throw hmcl::InputError("cannot write '" + out + "'");
    }
    return report.exit_code();
}

int check(const std::string& path)
{
    hmcl::JobFile job = hmcl::parse_job(read_file(path));
    hmcl::CheckSummary s = hmcl::check_job(job);
    std::cout << "ok: " << s.categories << " categories, " << s.groups << " groups, " << s.actions << " actions, "
              << s.bimodules << " bimodules, " << s.commands << " commands\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hochschild-Mitchell (co)homology of linear categories and their Galois coverings"};
    app.require_subcommand(1);

    std::string job_path, out, format = "json";
    bool timing = false;
    auto* run_cmd = app.add_subcommand("run", "Run every command of a job file and emit a report");
    run_cmd->add_option("JOBFILE", job_path, "Job file")->required();
    run_cmd->add_option("--out", out, "Write the report here instead of standard output");
    run_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_flag("--timing", timing, "Include wall-clock timings (makes the report non-deterministic)");

    std::string check_path;
    auto* check_cmd = app.add_subcommand("check", "Parse and build a job file without running it");
    check_cmd->add_option("JOBFILE", check_path, "Job file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*run_cmd)
            return run(job_path, out, format, timing);
        return check(check_path);
    } catch (const hmcl::Error& e) {
        std::cerr << "hmcl: " << (*run_cmd ? job_path : check_path) << ": " << e.what() << "\n";
        return input_error;
    }
}

#pragma once

#include "hmcl/cli/job.hpp"
#include "hmcl/cli/report.hpp"

namespace hmcl {

struct RunOptions {
    std::string input_digest;
    bool timing = false;
};

struct CheckSummary {
    std::size_t categories = 0;
    std::size_t groups = 0;
    std::size_t actions = 0;
    std::size_t bimodules = 0;
    std::size_t commands = 0;
};

// Builds every declared object without running commands. Throws InputError
// (or the module error) prefixed with the offending declaration.
CheckSummary check_job(const JobFile& job);

// Builds the declarations, then runs the commands in order. Errors raised by
// a command are recorded in its entry; later commands still run. Errors in
// the declarations propagate.
Report run_job(const JobFile& job, const RunOptions& options = {});

} // namespace hmcl

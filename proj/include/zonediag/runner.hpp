#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zonediag/scenario.hpp"

namespace zd {

struct CheckLine {
    std::string status;  // PASS | FAIL | UPTODISC | INFO
    std::string name;
    std::string details;
};

struct RunOverrides {
    int grid_n = 0;
    int max_iter = 0;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
};

struct RunResult {
    std::vector<CheckLine> checks;
    std::vector<std::string> artifacts;
    std::string out_dir;

    bool any_fail() const;
    int exit_code() const { return any_fail() ? 1 : 0; }
};

// Executes the scenario's analyses, writes artifacts under the output
// directory (images, masks, CSV traces, checks.txt), and returns the check
// lines. `log` receives one line per check as it is produced.
RunResult run_scenario(const Scenario& scenario, const RunOverrides& overrides,
                       std::ostream& log);

}  // namespace zd

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcw/config.hpp"
#include "vcw/diagnostics.hpp"

namespace vcw {

/// One CSV stream: a fixed header and rows of already formatted cells.
struct CsvTable {
    std::string file;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

using NamedValue = std::pair<std::string, double>;

struct RunReport {
    Scenario scenario = Scenario::profile_decay;
    std::vector<NamedValue> constants;  ///< resolved derived constants
    std::vector<NamedValue> metrics;    ///< scenario results that carry no threshold
    std::vector<Check> checks;
    std::vector<std::string> warnings;
    std::vector<std::string> manifest;
    double wall_seconds = 0.0;
    /// Set when the solver failed; the streams then hold the partial run.
    std::optional<std::string> error;

    bool all_pass() const;
    std::optional<double> metric(std::string_view name) const;
    const Check* check(std::string_view name) const;
};

struct ScenarioResult {
    RunReport report;
    std::vector<CsvTable> streams;
};

/// Executes the configured scenario. Solver failures are caught and recorded
/// in report.error; configuration errors propagate as Error.
ScenarioResult run_scenario(const RunConfig& config);

/// Writes every stream, summary.csv and run.json into `dir` (created if
/// missing), each through a temporary name and a rename. Fills and returns
/// the manifest. Throws Error{IoError}.
std::vector<std::string> write_outputs(RunReport& report, const std::vector<CsvTable>& streams,
                                       const std::filesystem::path& dir);

/// 0 when every check passes, 1 on a failed check, 3 when the solver failed.
int exit_code(const RunReport& report);

/// Shortest round-trip decimal form.
std::string format_number(double x);

}  // namespace vcw

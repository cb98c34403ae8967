#include <cmath>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "vcw/error.hpp"
#include "vcw/scenario.hpp"

namespace vcw {

namespace fs = std::filesystem;

namespace {

void write_atomic(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot open " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename onto " + target.string());
    }
}

std::string render(const CsvTable& table) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) line(row);
    return out;
}

CsvTable summary_table(const RunReport& report) {
    CsvTable t{"summary.csv", {"name", "measured", "threshold", "pass"}, {}};
    for (const auto& c : report.checks) {
        t.add({c.name, format_number(c.measured), format_number(c.threshold),
               c.pass ? "1" : "0"});
    }
    return t;
}

/// JSON has no inf/nan; those become strings.
nlohmann::json number(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);
}

}  // namespace

std::vector<std::string> write_outputs(RunReport& report, const std::vector<CsvTable>& streams,
                                       const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error(ErrorCode::IoError, "cannot create output directory " + dir.string());
    }

    report.manifest.clear();
    for (const auto& table : streams) {
        write_atomic(dir / table.file, render(table));
        report.manifest.push_back(table.file);
    }
    const CsvTable summary = summary_table(report);
    write_atomic(dir / summary.file, render(summary));
    report.manifest.push_back(summary.file);
    report.manifest.push_back("run.json");

    nlohmann::ordered_json doc;
    doc["scenario"] = std::string(to_string(report.scenario));
    for (const auto& [name, value] : report.constants) doc["constants"][name] = number(value);
    for (const auto& [name, value] : report.metrics) doc["metrics"][name] = number(value);
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        doc["checks"].push_back({{"name", c.name},
                                 {"measured", number(c.measured)},
                                 {"threshold", number(c.threshold)},
                                 {"sense", c.sense == Check::Sense::at_most ? "at_most" : "at_least"},
                                 {"pass", c.pass}});
    }
    doc["warnings"] = report.warnings;
    doc["error"] = report.error ? nlohmann::ordered_json(*report.error) : nullptr;
    doc["all_pass"] = report.all_pass();
    doc["manifest"] = report.manifest;
    doc["wall_seconds"] = report.wall_seconds;
    write_atomic(dir / "run.json", doc.dump(2) + "\n");
    return report.manifest;
}

}  // namespace vcw

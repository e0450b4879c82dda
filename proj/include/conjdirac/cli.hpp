#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace conjdirac {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

inline constexpr int kSchemaVersion = 1;

using Cell = std::variant<long long, double, std::string, bool>;

/// Schema version, command echo, config echo and payload rows.
struct OutputRecord {
    std::string command;
    double alpha = 0.0;
    double rest_energy_ev = 0.0;
    /// Extra header entries (e.g. the normalization constant).
    std::vector<std::pair<std::string, Cell>> extra_meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json, table };

/// Throws NumericalError if any numeric field is not finite.
void write_record(const OutputRecord& record, OutputFormat format, std::ostream& out);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conjdirac

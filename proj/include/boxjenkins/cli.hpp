#pragma once

#include "boxjenkins/model.hpp"
#include "boxjenkins/select.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace bj::cli {

enum class Command { Identify, Fit, Forecast, Evaluate, Backtest };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::Fit;
    std::string input;
    std::string column = "value";
    std::string forecast_column;  // evaluate only
    std::optional<ArimaOrder> order;  // unset means automatic selection
    Criterion criterion = Criterion::BIC;
    int horizon = 1;
    double level = 0.95;
    int max_lag = 0;  // identify; 0 picks min(10, n/4)
    bool drift = false;
    Format format = Format::Json;
    std::string output;     // empty writes to stdout
    std::string plot_data;  // empty skips the plot file
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name) and runs the command. Reports go
/// to `out` unless --output is given; diagnostics go to `err` as a single
/// line starting with `error:`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration; same exit codes as run().
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bj::cli

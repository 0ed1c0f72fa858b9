#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bj {

/// Accuracy of one forecast against actuals. `mape` is in percent.
struct AccuracyReport {
    std::string label;
    double mae = 0.0;
    double mape = 0.0;
    double rmse = 0.0;
    std::size_t k = 0;
};

[[nodiscard]] double mae(std::span<const double> actual, std::span<const double> forecast);

/// Percent: 100/k * sum |(forecast - actual) / actual|. Any zero actual is an
/// error rather than a skipped point.
[[nodiscard]] double mape(std::span<const double> actual, std::span<const double> forecast);

[[nodiscard]] double rmse(std::span<const double> actual, std::span<const double> forecast);

struct AccuracyRow {
    std::string label;
    std::vector<double> actual;
    std::vector<double> forecast;
};

/// One report per row, in input order. Errors name the offending row.
[[nodiscard]] std::vector<AccuracyReport> report(std::span<const AccuracyRow> rows);

}  // namespace bj

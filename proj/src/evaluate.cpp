#include "boxjenkins/evaluate.hpp"

#include "boxjenkins/error.hpp"

#include <cmath>

namespace bj {

namespace {

void check_pair(std::span<const double> actual, std::span<const double> forecast) {
    if (actual.empty()) {
        throw InvalidArgument("accuracy metrics need at least one point");
    }
    if (actual.size() != forecast.size()) {
        throw InvalidArgument("actual and forecast lengths differ (" + std::to_string(actual.size()) + " vs " +
                              std::to_string(forecast.size()) + ")");
    }
}

}  // namespace

double mae(std::span<const double> actual, std::span<const double> forecast) {
    check_pair(actual, forecast);
    double sum = 0.0;
    for (std::size_t t = 0; t < actual.size(); ++t) {
        sum += std::abs(forecast[t] - actual[t]);
    }
    return sum / static_cast<double>(actual.size());
}

double mape(std::span<const double> actual, std::span<const double> forecast) {
    check_pair(actual, forecast);
    double sum = 0.0;
    for (std::size_t t = 0; t < actual.size(); ++t) {
        if (actual[t] == 0.0) {
            throw InvalidArgument("MAPE undefined: actual value is zero at position " + std::to_string(t));
        }
        sum += std::abs((forecast[t] - actual[t]) / actual[t]);
    }
    return 100.0 * sum / static_cast<double>(actual.size());
}

double rmse(std::span<const double> actual, std::span<const double> forecast) {
    check_pair(actual, forecast);
    double sum = 0.0;
    for (std::size_t t = 0; t < actual.size(); ++t) {
        const double e = forecast[t] - actual[t];
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(actual.size()));
}

std::vector<AccuracyReport> report(std::span<const AccuracyRow> rows) {
    std::vector<AccuracyReport> out;
    out.reserve(rows.size());
    for (const AccuracyRow& row : rows) {
        try {
            out.push_back({row.label, mae(row.actual, row.forecast), mape(row.actual, row.forecast),
                           rmse(row.actual, row.forecast), row.actual.size()});
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(row.label + ": " + e.what());
        }
    }
    return out;
}

}  // namespace bj

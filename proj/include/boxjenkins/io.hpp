#pragma once

#include "boxjenkins/diagnose.hpp"
#include "boxjenkins/evaluate.hpp"
#include "boxjenkins/forecast.hpp"
#include "boxjenkins/identify.hpp"
#include "boxjenkins/model.hpp"
#include "boxjenkins/select.hpp"
#include "boxjenkins/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bj {

struct Dataset {
    std::string name;
    TimeSeries series;
};

/// Reads `date,<columns...>` CSV (comma separator, '.' decimals, LF or CRLF)
/// and returns the named column. Dates are `YYYY` or `YYYY-MM-DD` and must be
/// strictly increasing; every selected cell must be a finite number.
[[nodiscard]] Dataset parse_csv(std::string_view text, std::string_view column = "value");

/// Two columns of the same file, keeping only rows where both cells are
/// filled. Plot-data files leave cells empty where a column does not apply,
/// so `actual` against `fitted` pairs exactly the in-sample predictions.
struct PairedColumns {
    std::vector<std::string> dates;
    std::vector<double> actual;
    std::vector<double> forecast;
};
[[nodiscard]] PairedColumns parse_paired_csv(std::string_view text, std::string_view actual_column,
                                             std::string_view forecast_column);

/// `date,<name>` CSV with LF endings; parse_csv(to_csv(ds), ds.name) gives ds back.
[[nodiscard]] std::string to_csv(const Dataset& dataset);

/// Shortest decimal text that parses back to exactly `value`.
[[nodiscard]] std::string format_number(double value);

/// Plot-ready CSV: header `date,actual,fitted,forecast,lower,upper`, one row
/// per observation then one per forecast step. Cells that do not apply are
/// empty. Forecast rows are dated by the following years for yearly data and
/// `+1`, `+2`, ... otherwise.
[[nodiscard]] std::string emit_plot_data(const Dataset& actual, const FittedValues& fitted,
                                         const ForecastResult& forecast);

/// Everything one command may report; unset sections are left out of the JSON.
struct ReportData {
    std::string command;
    std::string dataset;
    std::optional<ArimaOrder> order;
    std::optional<ArimaParams> params;
    std::optional<double> loglik;
    std::optional<std::pair<Criterion, double>> criterion;
    std::optional<DiagnosticsReport> diagnostics;
    std::optional<ForecastResult> forecast;
    std::optional<AccuracyReport> metrics;

    struct Identification {
        int d = 0;
        std::vector<CorrelogramPoint> acf;
        std::vector<CorrelogramPoint> pacf;
        PatternSuggestion pattern;
    };
    std::optional<Identification> identification;
};

/// JSON document with a fixed key order, two-space indent and a trailing newline.
[[nodiscard]] std::string emit_report(const ReportData& report);

}  // namespace bj

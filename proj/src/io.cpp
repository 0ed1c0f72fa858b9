#include "boxjenkins/io.hpp"

#include "boxjenkins/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>

namespace bj {

namespace {

using Row = std::vector<std::string_view>;

std::vector<Row> split_rows(std::string_view text) {
    std::vector<Row> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        pos = end + 1;
        if (line.empty()) {
            continue;
        }
        Row cells;
        std::size_t start = 0;
        for (;;) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::size_t column_index(const Row& header, std::string_view name) {
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i] == name) {
            return i;
        }
    }
    throw ParseError("column '" + std::string(name) + "' not found in header");
}

const Row& checked_header(const std::vector<Row>& rows) {
    if (rows.empty()) {
        throw ParseError("empty input");
    }
    const Row& header = rows.front();
    if (header.size() < 2 || header[0] != "date") {
        throw ParseError("missing header: expected 'date,<column>...'");
    }
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() > header.size()) {
            throw ParseError("line " + std::to_string(r + 1) + ": more cells than header columns");
        }
    }
    return header;
}

double parse_value(std::string_view cell, std::size_t line) {
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (cell.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("line " + std::to_string(line) + ": unparsable value '" + std::string(cell) + "'");
    }
    if (!std::isfinite(v)) {
        throw ParseError("line " + std::to_string(line) + ": non-finite value '" + std::string(cell) + "'");
    }
    return v;
}

std::string_view cell_at(const Row& row, std::size_t index) {
    return index < row.size() ? row[index] : std::string_view{};
}

}  // namespace

Dataset parse_csv(std::string_view text, std::string_view column) {
    const auto rows = split_rows(text);
    const Row& header = checked_header(rows);
    const std::size_t col = column_index(header, column);
    if (rows.size() < 2) {
        throw ParseError("empty input: no data rows");
    }
    std::vector<TimeLabel> labels;
    std::vector<double> values;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const std::size_t line = r + 1;
        TimeLabel label;
        try {
            label = TimeLabel::parse(rows[r][0]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line) + ": " + e.what());
        }
        if (!labels.empty() && !(labels.back() < label)) {
            throw ParseError("line " + std::to_string(line) + ": duplicate or non-increasing date " +
                             std::string(rows[r][0]));
        }
        labels.push_back(label);
        values.push_back(parse_value(cell_at(rows[r], col), line));
    }
    return Dataset{std::string(column), TimeSeries(std::move(labels), std::move(values))};
}

PairedColumns parse_paired_csv(std::string_view text, std::string_view actual_column,
                               std::string_view forecast_column) {
    const auto rows = split_rows(text);
    const Row& header = checked_header(rows);
    const std::size_t a = column_index(header, actual_column);
    const std::size_t f = column_index(header, forecast_column);
    PairedColumns out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto ac = cell_at(rows[r], a);
        const auto fc = cell_at(rows[r], f);
        if (ac.empty() || fc.empty()) {
            continue;
        }
        out.dates.emplace_back(rows[r][0]);
        out.actual.push_back(parse_value(ac, r + 1));
        out.forecast.push_back(parse_value(fc, r + 1));
    }
    if (out.actual.empty()) {
        throw ParseError("empty input: no rows with both '" + std::string(actual_column) + "' and '" +
                         std::string(forecast_column) + "'");
    }
    return out;
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string to_csv(const Dataset& dataset) {
    std::string out = "date," + dataset.name + "\n";
    const auto labels = dataset.series.labels();
    const auto values = dataset.series.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += labels[i].to_string() + "," + format_number(values[i]) + "\n";
    }
    return out;
}

std::string emit_plot_data(const Dataset& actual, const FittedValues& fitted, const ForecastResult& forecast) {
    const auto values = actual.series.values();
    const auto labels = actual.series.labels();
    const auto h = forecast.points.size();
    if (fitted.values.size() != values.size()) {
        throw InvalidArgument("fitted values are not aligned with the actual series");
    }
    if (forecast.se.size() != h || forecast.lower.size() != h || forecast.upper.size() != h) {
        throw InvalidArgument("forecast columns differ in length");
    }
    std::string out = "date,actual,fitted,forecast,lower,upper\n";
    for (std::size_t t = 0; t < values.size(); ++t) {
        out += labels[t].to_string() + "," + format_number(values[t]) + ",";
        if (std::isfinite(fitted.values[t])) {
            out += format_number(fitted.values[t]);
        }
        out += ",,,\n";
    }
    const TimeLabel last = labels.back();
    for (std::size_t j = 0; j < h; ++j) {
        if (last.is_year()) {
            out += TimeLabel{last.year + static_cast<int>(j) + 1, 0, 0}.to_string();
        } else {
            out += "+" + std::to_string(j + 1);
        }
        out += ",,," + format_number(forecast.points[j]) + "," + format_number(forecast.lower[j]) + "," +
               format_number(forecast.upper[j]) + "\n";
    }
    return out;
}

std::string emit_report(const ReportData& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["command"] = report.command;
    doc["dataset"] = report.dataset;
    if (report.identification) {
        const auto& id = *report.identification;
        ordered_json section;
        section["d"] = id.d;
        section["band"] = id.acf.empty() ? 0.0 : id.acf.front().band;
        auto values = [](const std::vector<CorrelogramPoint>& pts) {
            ordered_json arr = ordered_json::array();
            for (const auto& pt : pts) {
                arr.push_back(pt.value);
            }
            return arr;
        };
        section["acf"] = values(id.acf);
        section["pacf"] = values(id.pacf);
        section["pattern"] = {{"kind", std::string(to_string(id.pattern.kind))},
                              {"p", id.pattern.suggested_p},
                              {"q", id.pattern.suggested_q}};
        doc["identification"] = std::move(section);
    }
    if (report.order) {
        doc["order"] = {{"p", report.order->p}, {"d", report.order->d}, {"q", report.order->q}};
    }
    if (report.params) {
        doc["params"] = {{"mu", report.params->mu},
                         {"beta", report.params->beta},
                         {"alpha_paper_sign", report.params->alpha},
                         {"sigma2", report.params->sigma2}};
    }
    if (report.loglik) {
        doc["loglik"] = *report.loglik;
    }
    if (report.criterion) {
        doc["criterion"] = {{"name", std::string(to_string(report.criterion->first))},
                            {"value", report.criterion->second}};
    }
    if (report.diagnostics) {
        const auto& dg = *report.diagnostics;
        doc["diagnostics"] = {
            {"ljung_box", {{"stat", dg.ljung_box.stat}, {"df", dg.ljung_box.df}, {"p", dg.ljung_box.p_value}}},
            {"jarque_bera", {{"stat", dg.jarque_bera.stat}, {"p", dg.jarque_bera.p_value}}}};
    }
    if (report.forecast) {
        const auto& fc = *report.forecast;
        doc["forecast"] = {{"points", fc.points},
                           {"se", fc.se},
                           {"lower", fc.lower},
                           {"upper", fc.upper},
                           {"level", fc.level}};
    }
    if (report.metrics) {
        const auto& m = *report.metrics;
        doc["metrics"] = {{"mae", m.mae}, {"mape_percent", m.mape}, {"rmse", m.rmse}, {"k", m.k}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace bj

#include "boxjenkins/series.hpp"

#include "boxjenkins/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <utility>

namespace bj {

namespace {

bool parse_int(std::string_view text, int& out) {
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && ((year % 4 == 0 && year % 100 != 0) || year % 400 == 0)) {
        return 29;
    }
    return kDays[month - 1];
}

}  // namespace

std::string TimeLabel::to_string() const {
    char buf[32];
    if (is_year()) {
        std::snprintf(buf, sizeof buf, "%04d", year);
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    }
    return buf;
}

TimeLabel TimeLabel::parse(std::string_view text) {
    TimeLabel label;
    if (text.size() == 4) {
        if (!parse_int(text, label.year)) {
            throw ParseError("unparsable date '" + std::string(text) + "'");
        }
        return label;
    }
    if (text.size() == 10 && text[4] == '-' && text[7] == '-' &&
        parse_int(text.substr(0, 4), label.year) && parse_int(text.substr(5, 2), label.month) &&
        parse_int(text.substr(8, 2), label.day) && label.month >= 1 && label.month <= 12 &&
        label.day >= 1 && label.day <= days_in_month(label.year, label.month)) {
        return label;
    }
    throw ParseError("unparsable date '" + std::string(text) + "'");
}

TimeSeries::TimeSeries(std::vector<TimeLabel> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidArgument("time series must contain at least one observation");
    }
    if (labels_.size() != values_.size()) {
        throw InvalidArgument("time series labels and values differ in length");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidArgument("non-finite value at " + labels_[i].to_string());
        }
        if (i > 0 && !(labels_[i - 1] < labels_[i])) {
            throw InvalidArgument("timestamps not strictly increasing at " + labels_[i].to_string());
        }
    }
}

TimeSeries TimeSeries::from_values(std::vector<double> values) {
    std::vector<TimeLabel> labels(values.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i].year = static_cast<int>(i) + 1;
    }
    return TimeSeries(std::move(labels), std::move(values));
}

DifferencedSeries difference(std::span<const double> values, int d) {
    if (d < 0 || d > kMaxDifferencing) {
        throw InvalidArgument("differencing order must be in [0, 2], got " + std::to_string(d));
    }
    if (values.size() <= static_cast<std::size_t>(d)) {
        throw InsufficientData("series of length " + std::to_string(values.size()) +
                               " too short for differencing order " + std::to_string(d));
    }
    DifferencedSeries out;
    out.d = d;
    out.values.assign(values.begin(), values.end());
    for (int level = 0; level < d; ++level) {
        out.heads.push_back(out.values.front());
        for (std::size_t t = 0; t + 1 < out.values.size(); ++t) {
            out.values[t] = out.values[t + 1] - out.values[t];
        }
        out.values.pop_back();
    }
    return out;
}

DifferencedSeries difference(const TimeSeries& series, int d) {
    return difference(series.values(), d);
}

std::vector<double> undifference(const DifferencedSeries& diff) {
    if (diff.d < 0 || diff.heads.size() != static_cast<std::size_t>(diff.d)) {
        throw InvalidArgument("differencing heads do not match order d");
    }
    std::vector<double> level = diff.values;
    for (int k = diff.d - 1; k >= 0; --k) {
        std::vector<double> up;
        up.reserve(level.size() + 1);
        up.push_back(diff.heads[static_cast<std::size_t>(k)]);
        for (double delta : level) {
            up.push_back(up.back() + delta);
        }
        level = std::move(up);
    }
    return level;
}

SeriesSummary summary(std::span<const double> values) {
    if (values.empty()) {
        throw InvalidArgument("summary of an empty sequence");
    }
    SeriesSummary s;
    s.n = values.size();
    const double n = static_cast<double>(s.n);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - s.mean) * (v - s.mean);
    }
    s.variance = ss / n;
    return s;
}

}  // namespace bj

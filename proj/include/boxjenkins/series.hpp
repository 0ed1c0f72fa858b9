#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace bj {

/// Calendar label of one observation: either a bare year (`2006`) or a full
/// ISO date (`2006-01-31`). Labels order chronologically.
struct TimeLabel {
    int year = 0;
    int month = 0;  // 0 when the label is a bare year
    int day = 0;

    [[nodiscard]] bool is_year() const noexcept { return month == 0; }
    [[nodiscard]] std::string to_string() const;

    /// Parses `YYYY` or `YYYY-MM-DD`; throws ParseError otherwise.
    static TimeLabel parse(std::string_view text);

    auto operator<=>(const TimeLabel&) const = default;
};

/// Ordered, strictly increasing, finite observations.
class TimeSeries {
public:
    /// Throws InvalidArgument on empty input, size mismatch, non-increasing
    /// labels or non-finite values.
    TimeSeries(std::vector<TimeLabel> labels, std::vector<double> values);

    /// Labels the values as consecutive years 1, 2, ..., n.
    static TimeSeries from_values(std::vector<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::span<const TimeLabel> labels() const noexcept { return labels_; }

private:
    std::vector<TimeLabel> labels_;
    std::vector<double> values_;
};

/// Result of differencing d times. `heads[k]` is the first value of the
/// level-k series (level 0 is the original), which is all undifference needs.
struct DifferencedSeries {
    std::vector<double> values;
    int d = 0;
    std::vector<double> heads;
};

struct SeriesSummary {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // divisor n
};

inline constexpr int kMaxDifferencing = 2;

[[nodiscard]] DifferencedSeries difference(std::span<const double> values, int d);
[[nodiscard]] DifferencedSeries difference(const TimeSeries& series, int d);

[[nodiscard]] std::vector<double> undifference(const DifferencedSeries& diff);

[[nodiscard]] SeriesSummary summary(std::span<const double> values);

}  // namespace bj

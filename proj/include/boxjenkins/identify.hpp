#pragma once

#include "boxjenkins/series.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace bj {

/// One lag of a sample correlogram. `band` is the half-width 1.96/sqrt(n) of
/// the approximate 95% white-noise band.
struct CorrelogramPoint {
    int lag = 0;
    double value = 0.0;
    double band = 0.0;

    [[nodiscard]] bool significant() const noexcept;
};

enum class PatternKind { AR, MA, ARMA, None };

[[nodiscard]] std::string_view to_string(PatternKind kind) noexcept;

struct PatternSuggestion {
    PatternKind kind = PatternKind::None;
    int suggested_p = 0;
    int suggested_q = 0;
};

/// Sample ACF for lags 0..max_lag, biased estimator (divisor n), so the
/// autocovariance sequence is positive semi-definite.
[[nodiscard]] std::vector<CorrelogramPoint> acf(std::span<const double> values, int max_lag);

/// Sample PACF for lags 1..max_lag by Durbin-Levinson on the sample ACF.
[[nodiscard]] std::vector<CorrelogramPoint> pacf(std::span<const double> values, int max_lag);

/// Differencing order in [0, max_d] minimizing the variance of the
/// differenced series; ties go to the smaller order.
[[nodiscard]] int select_d(std::span<const double> values, int max_d = kMaxDifferencing);
[[nodiscard]] int select_d(const TimeSeries& series, int max_d = kMaxDifferencing);

/// Cut-off / tail-off reading of a pair of correlograms.
///
/// A correlogram "cuts off after k" when lags 1..k are significant and every
/// lag k+1..max is not, for some 1 <= k < max. PACF cut-off with a tailing ACF
/// suggests AR(k); the mirror image suggests MA(k). When both cut off the
/// lower order wins (AR on ties). Both tailing off suggests ARMA(1,1). No
/// significant lag at all gives None.
///
/// Significance uses the 1.96/sqrt(n) band. `acf_points` may include lag 0;
/// it is ignored.
[[nodiscard]] PatternSuggestion classify(std::span<const CorrelogramPoint> acf_points,
                                         std::span<const CorrelogramPoint> pacf_points,
                                         std::size_t n);

/// Default correlogram depth for an n-point series: min(10, n/4), at least 1.
[[nodiscard]] int default_max_lag(std::size_t n) noexcept;

}  // namespace bj

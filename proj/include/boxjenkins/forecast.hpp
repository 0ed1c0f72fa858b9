#pragma once

#include "boxjenkins/model.hpp"

#include <cstddef>
#include <vector>

namespace bj {

struct ForecastResult {
    int horizon = 0;
    std::vector<double> points;  // original scale
    std::vector<double> se;
    std::vector<double> lower;
    std::vector<double> upper;
    double level = 0.95;
};

/// h-step forecasts on the original scale. Standard errors come from the
/// exact forecast-error covariance of the state-space model (conditional on
/// the fitted parameters), carried through the d cumulative sums.
[[nodiscard]] ForecastResult forecast(const FittedModel& model, int horizon, double level = 0.95);

/// In-sample one-step-ahead predictions on the original scale.
///
/// values[t] for t < d is NaN: no differenced observation exists to predict
/// there. The first `warmup` (= d + 1) entries are flagged: entry d is the
/// prediction made from the stationary initial state alone.
struct FittedValues {
    std::vector<double> values;
    std::size_t warmup = 0;
    std::size_t first_defined = 0;  // = d
};

[[nodiscard]] FittedValues fitted_values(const FittedModel& model);

}  // namespace bj

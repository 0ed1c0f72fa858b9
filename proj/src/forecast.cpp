#include "boxjenkins/forecast.hpp"

#include "boxjenkins/error.hpp"
#include "boxjenkins/special.hpp"

#include <cmath>
#include <limits>

namespace bj {

namespace {

// a <- T a for the companion transition
void advance(const detail::ArmaStateSpace& ss, std::vector<double>& a) {
    const double a0 = a[0];
    for (std::size_t i = 0; i < ss.m; ++i) {
        a[i] = ss.phi[i] * a0 + (i + 1 < ss.m ? a[i + 1] : 0.0);
    }
}

// P <- T P T' + R R'
std::vector<double> propagate(const detail::ArmaStateSpace& ss, const std::vector<double>& p) {
    const std::size_t m = ss.m;
    std::vector<double> tp(m * m), out(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            tp[i * m + j] = ss.phi[i] * p[j] + (i + 1 < m ? p[(i + 1) * m + j] : 0.0);
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out[i * m + j] = tp[i * m] * ss.phi[j] + (j + 1 < m ? tp[i * m + j + 1] : 0.0) + ss.theta[i] * ss.theta[j];
        }
    }
    return out;
}

}  // namespace

ForecastResult forecast(const FittedModel& model, int horizon, double level) {
    if (horizon < 1) {
        throw InvalidArgument("forecast horizon must be at least 1");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw InvalidArgument("interval level must lie in (0, 1)");
    }
    const auto h = static_cast<std::size_t>(horizon);
    const int d = model.order.d;
    const ArimaParams& params = model.params;
    const DifferencedSeries diff = difference(model.series, d);
    const detail::ArmaStateSpace ss(params.beta, params.alpha);
    const detail::FilterPass pass = detail::filter(ss, diff.values, params.mu);

    // differenced-scale point forecasts and error covariance (unit sigma2)
    std::vector<double> wpoints(h);
    std::vector<double> cov(h * h);
    std::vector<double> a = pass.state;
    std::vector<double> p = pass.state_cov;
    std::vector<double> row(ss.m), next(ss.m);
    for (std::size_t i = 0; i < h; ++i) {
        wpoints[i] = params.mu + a[0];
        // Cov(e_i, e_k) = (P_i (T')^(k-i))_00, and row 0 of P T' is T applied to row 0 of P.
        std::copy(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(ss.m), row.begin());
        for (std::size_t k = i; k < h; ++k) {
            cov[i * h + k] = row[0];
            cov[k * h + i] = row[0];
            advance(ss, row);
        }
        advance(ss, a);
        p = propagate(ss, p);
    }

    // integrate d times: points by cumulative sums from the last value of each
    // differencing level, covariance by the matching lower-triangular sums
    std::vector<double> points = wpoints;
    for (int k = d - 1; k >= 0; --k) {
        double last = difference(model.series, k).values.back();
        for (double& v : points) {
            last += v;
            v = last;
        }
        for (std::size_t j = 0; j < h; ++j) {  // rows
            for (std::size_t i = 1; i < h; ++i) {
                cov[i * h + j] += cov[(i - 1) * h + j];
            }
        }
        for (std::size_t i = 0; i < h; ++i) {  // columns
            for (std::size_t j = 1; j < h; ++j) {
                cov[i * h + j] += cov[i * h + j - 1];
            }
        }
    }

    ForecastResult out;
    out.horizon = horizon;
    out.level = level;
    out.points = std::move(points);
    const double z = normal_quantile(0.5 * (1.0 + level));
    for (std::size_t i = 0; i < h; ++i) {
        const double se = std::sqrt(std::max(0.0, params.sigma2 * cov[i * h + i]));
        out.se.push_back(se);
        out.lower.push_back(out.points[i] - z * se);
        out.upper.push_back(out.points[i] + z * se);
    }
    return out;
}

FittedValues fitted_values(const FittedModel& model) {
    const int d = model.order.d;
    const auto y = model.series.values();
    const DifferencedSeries diff = difference(model.series, d);
    const detail::ArmaStateSpace ss(model.params.beta, model.params.alpha);
    const detail::FilterPass pass = detail::filter(ss, diff.values, model.params.mu);

    FittedValues out;
    out.first_defined = static_cast<std::size_t>(d);
    out.warmup = static_cast<std::size_t>(d) + 1;
    out.values.assign(y.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t t = out.first_defined; t < y.size(); ++t) {
        const std::size_t s = t - out.first_defined;
        const double predicted_diff = diff.values[s] - pass.innovations[s];
        // undo (1 - B)^d: y_t = w_t + y_{t-1} for d = 1, w_t + 2 y_{t-1} - y_{t-2} for d = 2
        double carry = 0.0;
        if (d == 1) {
            carry = y[t - 1];
        } else if (d == 2) {
            carry = 2.0 * y[t - 1] - y[t - 2];
        }
        out.values[t] = predicted_diff + carry;
    }
    return out;
}

}  // namespace bj

#include "boxjenkins/identify.hpp"

#include "boxjenkins/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace bj {

bool CorrelogramPoint::significant() const noexcept { return std::abs(value) > band; }

std::string_view to_string(PatternKind kind) noexcept {
    switch (kind) {
        case PatternKind::AR:
            return "AR";
        case PatternKind::MA:
            return "MA";
        case PatternKind::ARMA:
            return "ARMA";
        case PatternKind::None:
            break;
    }
    return "NONE";
}

namespace {

double band_for(std::size_t n) { return 1.96 / std::sqrt(static_cast<double>(n)); }

void check_lag_request(std::size_t n, int max_lag) {
    if (max_lag < 1) {
        throw InvalidArgument("max_lag must be positive");
    }
    if (static_cast<std::size_t>(max_lag) >= n) {
        throw InsufficientData("max_lag " + std::to_string(max_lag) + " must be below series length " +
                               std::to_string(n));
    }
}

// Autocorrelations r_0..r_max_lag.
std::vector<double> autocorrelations(std::span<const double> values, int max_lag) {
    check_lag_request(values.size(), max_lag);
    const std::size_t n = values.size();
    const SeriesSummary s = summary(values);
    double denom = 0.0;
    for (double v : values) {
        denom += (v - s.mean) * (v - s.mean);
    }
    if (!(denom > 0.0)) {
        throw DegenerateSeries("autocorrelation of a zero-variance series");
    }
    std::vector<double> r(static_cast<std::size_t>(max_lag) + 1);
    r[0] = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) {
            num += (values[t] - s.mean) * (values[t - static_cast<std::size_t>(k)] - s.mean);
        }
        r[static_cast<std::size_t>(k)] = num / denom;
    }
    return r;
}

// Smallest k < max such that lags 1..k are significant and k+1..max are not.
std::optional<int> cutoff(std::span<const CorrelogramPoint> points, double band) {
    std::vector<bool> sig;
    for (const auto& pt : points) {
        if (pt.lag >= 1) {
            sig.push_back(std::abs(pt.value) > band);
        }
    }
    const int max = static_cast<int>(sig.size());
    int k = 0;
    while (k < max && sig[static_cast<std::size_t>(k)]) {
        ++k;
    }
    if (k == 0 || k == max) {
        return std::nullopt;
    }
    for (int j = k; j < max; ++j) {
        if (sig[static_cast<std::size_t>(j)]) {
            return std::nullopt;
        }
    }
    return k;
}

bool any_significant(std::span<const CorrelogramPoint> points, double band) {
    return std::any_of(points.begin(), points.end(), [band](const CorrelogramPoint& pt) {
        return pt.lag >= 1 && std::abs(pt.value) > band;
    });
}

}  // namespace

std::vector<CorrelogramPoint> acf(std::span<const double> values, int max_lag) {
    const auto r = autocorrelations(values, max_lag);
    const double band = band_for(values.size());
    std::vector<CorrelogramPoint> out;
    out.reserve(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        out.push_back({static_cast<int>(k), r[k], band});
    }
    return out;
}

std::vector<CorrelogramPoint> pacf(std::span<const double> values, int max_lag) {
    const auto r = autocorrelations(values, max_lag);
    const double band = band_for(values.size());

    std::vector<CorrelogramPoint> out;
    out.reserve(static_cast<std::size_t>(max_lag));
    std::vector<double> phi;  // coefficients of the order-k Yule-Walker fit
    double v = 1.0;           // normalized prediction error variance
    for (int k = 1; k <= max_lag; ++k) {
        double num = r[static_cast<std::size_t>(k)];
        for (int j = 1; j < k; ++j) {
            num -= phi[static_cast<std::size_t>(j - 1)] * r[static_cast<std::size_t>(k - j)];
        }
        if (!(v > 0.0)) {
            throw DegenerateSeries("Durbin-Levinson breakdown at lag " + std::to_string(k));
        }
        const double kk = num / v;
        std::vector<double> next(static_cast<std::size_t>(k));
        for (int j = 1; j < k; ++j) {
            next[static_cast<std::size_t>(j - 1)] =
                phi[static_cast<std::size_t>(j - 1)] - kk * phi[static_cast<std::size_t>(k - j - 1)];
        }
        next[static_cast<std::size_t>(k - 1)] = kk;
        phi = std::move(next);
        v *= (1.0 - kk * kk);
        out.push_back({k, kk, band});
    }
    return out;
}

int select_d(std::span<const double> values, int max_d) {
    if (max_d < 0 || max_d > kMaxDifferencing) {
        throw InvalidArgument("max_d must be in [0, 2]");
    }
    if (values.size() <= static_cast<std::size_t>(max_d) + 2) {
        throw InsufficientData("series too short to choose a differencing order");
    }
    int best = 0;
    double best_var = summary(values).variance;
    for (int d = 1; d <= max_d; ++d) {
        const double var = summary(difference(values, d).values).variance;
        if (var < best_var) {
            best = d;
            best_var = var;
        }
    }
    return best;
}

int select_d(const TimeSeries& series, int max_d) { return select_d(series.values(), max_d); }

PatternSuggestion classify(std::span<const CorrelogramPoint> acf_points,
                           std::span<const CorrelogramPoint> pacf_points, std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("classify needs the series length");
    }
    const double band = band_for(n);
    if (!any_significant(acf_points, band) && !any_significant(pacf_points, band)) {
        return {};
    }
    const auto q = cutoff(acf_points, band);
    const auto p = cutoff(pacf_points, band);
    if (p && (!q || *p <= *q)) {
        return {PatternKind::AR, *p, 0};
    }
    if (q) {
        return {PatternKind::MA, 0, *q};
    }
    return {PatternKind::ARMA, 1, 1};
}

int default_max_lag(std::size_t n) noexcept {
    return std::max(1, std::min(10, static_cast<int>(n / 4)));
}

}  // namespace bj

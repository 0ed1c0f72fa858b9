#pragma once

#include "boxjenkins/identify.hpp"
#include "boxjenkins/model.hpp"

#include <span>
#include <vector>

namespace bj {

inline constexpr double kDiagnosticLevel = 0.05;

struct LjungBox {
    double stat = 0.0;
    int df = 0;
    double p_value = 1.0;
};

struct JarqueBera {
    double stat = 0.0;
    double p_value = 1.0;
};

struct DiagnosticsReport {
    LjungBox ljung_box;
    JarqueBera jarque_bera;
    std::vector<CorrelogramPoint> residual_acf;  // lags 0..h
    bool uncorrelated_pass = false;              // Ljung-Box p > 0.05
    bool normal_pass = false;                    // Jarque-Bera p > 0.05
};

/// Portmanteau test on the first h residual autocorrelations, with
/// h - fitted_count degrees of freedom.
[[nodiscard]] LjungBox ljung_box(std::span<const double> resid, int h, int fitted_count);

/// Skewness/kurtosis normality test (divisor-n moments, 2 degrees of freedom).
[[nodiscard]] JarqueBera jarque_bera(std::span<const double> resid);

/// min(10, n/5) for n residuals.
[[nodiscard]] int default_ljung_box_lags(std::size_t n) noexcept;

/// Both residual tests, with fitted_count = p + q.
[[nodiscard]] DiagnosticsReport diagnose(const FittedModel& model, int h);

}  // namespace bj

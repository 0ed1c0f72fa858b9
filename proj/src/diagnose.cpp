#include "boxjenkins/diagnose.hpp"

#include "boxjenkins/error.hpp"
#include "boxjenkins/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bj {

LjungBox ljung_box(std::span<const double> resid, int h, int fitted_count) {
    if (h < 1 || fitted_count < 0) {
        throw InvalidArgument("Ljung-Box needs h >= 1 and fitted_count >= 0");
    }
    if (h <= fitted_count) {
        throw InvalidArgument("Ljung-Box lag count " + std::to_string(h) + " must exceed the " +
                              std::to_string(fitted_count) + " fitted coefficients");
    }
    if (resid.size() < static_cast<std::size_t>(h) + 1) {
        throw InsufficientData("Ljung-Box needs more than h residuals");
    }
    const auto r = acf(resid, h);
    const double n = static_cast<double>(resid.size());
    double sum = 0.0;
    for (int k = 1; k <= h; ++k) {
        const double rk = r[static_cast<std::size_t>(k)].value;
        sum += rk * rk / (n - k);
    }
    LjungBox out;
    out.stat = n * (n + 2.0) * sum;
    out.df = h - fitted_count;
    out.p_value = chi_square_sf(out.stat, out.df);
    return out;
}

JarqueBera jarque_bera(std::span<const double> resid) {
    if (resid.size() < 8) {
        throw InsufficientData("Jarque-Bera needs at least 8 residuals");
    }
    const SeriesSummary s = summary(resid);
    if (!(s.variance > 0.0)) {
        throw DegenerateSeries("Jarque-Bera on zero-variance residuals");
    }
    double m3 = 0.0;
    double m4 = 0.0;
    for (double x : resid) {
        const double z = x - s.mean;
        m3 += z * z * z;
        m4 += z * z * z * z;
    }
    const double n = static_cast<double>(resid.size());
    m3 /= n;
    m4 /= n;
    const double skew = m3 / std::pow(s.variance, 1.5);
    const double kurt = m4 / (s.variance * s.variance);
    JarqueBera out;
    out.stat = n / 6.0 * (skew * skew + 0.25 * (kurt - 3.0) * (kurt - 3.0));
    out.p_value = chi_square_sf(out.stat, 2.0);
    return out;
}

int default_ljung_box_lags(std::size_t n) noexcept {
    return std::min(10, static_cast<int>(n / 5));
}

DiagnosticsReport diagnose(const FittedModel& model, int h) {
    const int fitted = model.order.p + model.order.q;
    DiagnosticsReport out;
    out.ljung_box = ljung_box(model.residuals, h, fitted);
    out.jarque_bera = jarque_bera(model.residuals);
    out.residual_acf = acf(model.residuals, h);
    out.uncorrelated_pass = out.ljung_box.p_value > kDiagnosticLevel;
    out.normal_pass = out.jarque_bera.p_value > kDiagnosticLevel;
    return out;
}

}  // namespace bj

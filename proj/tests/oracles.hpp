#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library code paths it is used to check.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <vector>

namespace oracle {

/// erf by its Maclaurin series, 30 terms.
inline double erf_taylor(double x) {
    double sum = 0.0;
    double power = x;  // x^(2n+1)
    double fact = 1.0; // n!
    for (int n = 0; n < 30; ++n) {
        if (n > 0) {
            power *= x * x;
            fact *= n;
        }
        const double term = power / (fact * (2 * n + 1));
        sum += (n % 2 == 0) ? term : -term;
    }
    return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

inline double normal_cdf(double x) { return 0.5 * (1.0 + erf_taylor(x / std::numbers::sqrt2)); }

/// Autocovariances gamma_0..gamma_maxlag of the ARMA process
/// y_t = sum beta_i y_{t-i} - sum alpha_j u_{t-j} + u_t, via psi weights
/// summed until they are negligible.
inline std::vector<double> arma_autocovariance(std::span<const double> beta, std::span<const double> alpha,
                                               double sigma2, int maxlag, int terms = 20000) {
    std::vector<double> psi(static_cast<std::size_t>(terms), 0.0);
    for (int k = 0; k < terms; ++k) {
        double v = (k == 0) ? 1.0 : 0.0;
        if (k >= 1 && static_cast<std::size_t>(k) <= alpha.size()) {
            v -= alpha[static_cast<std::size_t>(k - 1)];
        }
        for (std::size_t i = 1; i <= beta.size() && static_cast<int>(i) <= k; ++i) {
            v += beta[i - 1] * psi[static_cast<std::size_t>(k) - i];
        }
        psi[static_cast<std::size_t>(k)] = std::abs(v) < 1e-200 ? 0.0 : v;  // subnormals are slow
    }
    std::vector<double> gamma(static_cast<std::size_t>(maxlag) + 1, 0.0);
    for (int h = 0; h <= maxlag; ++h) {
        long double s = 0.0L;
        for (int j = 0; j + h < terms; ++j) {
            s += static_cast<long double>(psi[static_cast<std::size_t>(j)]) * psi[static_cast<std::size_t>(j + h)];
        }
        gamma[static_cast<std::size_t>(h)] = sigma2 * static_cast<double>(s);
    }
    return gamma;
}

/// Joint Gaussian log-density of `values - mu` under the ARMA autocovariance.
inline double dense_loglik(std::span<const double> beta, std::span<const double> alpha, double mu, double sigma2,
                           std::span<const double> values) {
    const int n = static_cast<int>(values.size());
    const auto gamma = arma_autocovariance(beta, alpha, sigma2, n);
    Eigen::MatrixXd cov(n, n);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) {
        x(i) = values[static_cast<std::size_t>(i)] - mu;
        for (int j = 0; j < n; ++j) {
            cov(i, j) = gamma[static_cast<std::size_t>(std::abs(i - j))];
        }
    }
    const Eigen::LLT<Eigen::MatrixXd> llt(cov);
    const Eigen::MatrixXd lower = llt.matrixL();
    double logdet = 0.0;
    for (int i = 0; i < n; ++i) {
        logdet += 2.0 * std::log(lower(i, i));
    }
    const double quad = x.dot(llt.solve(x));
    return -0.5 * (n * std::log(2.0 * std::numbers::pi) + logdet + quad);
}

/// Last coefficient of a lag-k least-squares autoregression on the demeaned
/// series padded with k zeros at both ends (the autocorrelation method),
/// solved by Householder QR on the explicit design matrix.
inline double padded_ols_pacf(std::span<const double> values, int k) {
    const int n = static_cast<int>(values.size());
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= n;
    std::vector<double> padded(static_cast<std::size_t>(n + 2 * k), 0.0);
    for (int i = 0; i < n; ++i) {
        padded[static_cast<std::size_t>(i + k)] = values[static_cast<std::size_t>(i)] - mean;
    }
    // targets: every padded position whose lags reach into the data
    const int rows = n + k;
    Eigen::MatrixXd design(rows, k);
    Eigen::VectorXd target(rows);
    for (int r = 0; r < rows; ++r) {
        const int t = r + k;
        target(r) = padded[static_cast<std::size_t>(t)];
        for (int j = 1; j <= k; ++j) {
            design(r, j - 1) = padded[static_cast<std::size_t>(t - j)];
        }
    }
    const Eigen::VectorXd coef = design.householderQr().solve(target);
    return coef(k - 1);
}

/// Plain-loop sample autocorrelation at one lag (biased).
inline double direct_acf(std::span<const double> y, int k) {
    const std::size_t n = y.size();
    double mean = 0.0;
    for (double v : y) {
        mean += v;
    }
    mean /= static_cast<double>(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        den += (y[t] - mean) * (y[t] - mean);
        if (t >= static_cast<std::size_t>(k)) {
            num += (y[t] - mean) * (y[t - static_cast<std::size_t>(k)] - mean);
        }
    }
    return num / den;
}

/// Box-Muller over mt19937_64 written out independently of the library's
/// GaussianStream: (u1 in (0,1], u2 in [0,1)) -> (r cos, r sin).
inline std::vector<double> reference_gaussians(unsigned long long seed, std::size_t count) {
    std::mt19937_64 engine(seed);
    std::vector<double> out;
    while (out.size() < count) {
        const unsigned long long a = engine();
        const unsigned long long b = engine();
        const double u1 = std::ldexp(static_cast<double>((a >> 11) + 1), -53);
        const double u2 = std::ldexp(static_cast<double>(b >> 11), -53);
        const double r = std::sqrt(-2.0 * std::log(u1));
        out.push_back(r * std::cos(2.0 * std::numbers::pi * u2));
        out.push_back(r * std::sin(2.0 * std::numbers::pi * u2));
    }
    out.resize(count);
    return out;
}

/// ARMA companion-matrix eigenvalue moduli: all below 1 iff every root of
/// 1 - c_1 z - ... - c_k z^k lies outside the unit circle.
inline double max_inverse_root_modulus(std::span<const double> c) {
    const int k = static_cast<int>(c.size());
    if (k == 0) {
        return 0.0;
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j < k; ++j) {
        companion(0, j) = c[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i < k; ++i) {
        companion(i, i - 1) = 1.0;
    }
    const Eigen::VectorXcd eig = companion.eigenvalues();
    double m = 0.0;
    for (int i = 0; i < k; ++i) {
        m = std::max(m, std::abs(eig(i)));
    }
    return m;
}

}  // namespace oracle

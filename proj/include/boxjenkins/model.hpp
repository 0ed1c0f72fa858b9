#pragma once

#include "boxjenkins/optimize.hpp"
#include "boxjenkins/series.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace bj {

inline constexpr int kMaxArmaOrder = 5;

struct ArimaOrder {
    int p = 0;
    int d = 0;
    int q = 0;

    /// Throws InvalidArgument unless 0 <= p, q <= 5 and 0 <= d <= 2.
    void validate() const;
    [[nodiscard]] std::string to_string() const;

    bool operator==(const ArimaOrder&) const = default;
};

/// Parameters of the ARMA recursion
///
///   y_t = beta0 + beta_1 y_{t-1} + ... + beta_p y_{t-p}
///               - alpha_1 u_{t-1} - ... - alpha_q u_{t-q} + u_t
///
/// applied to the d-times differenced series. MA coefficients keep this
/// subtractive sign; the conventional "+theta" coefficients are
/// theta_j = -alpha_j (see conventional_ma()). The intercept is stored as the
/// process mean mu, with beta0 = mu * (1 - sum beta_i).
struct ArimaParams {
    double mu = 0.0;
    std::vector<double> beta;
    std::vector<double> alpha;
    double sigma2 = 1.0;

    [[nodiscard]] double beta0() const;
    [[nodiscard]] std::vector<double> conventional_ma() const;

    /// Throws ModelError if the coefficient counts do not match `order`, the AR
    /// polynomial is not stationary, the MA polynomial is not invertible, or
    /// sigma2 is not positive (or negative, when `allow_zero_variance`).
    void validate(const ArimaOrder& order, bool allow_zero_variance = false) const;
};

/// True when 1 - c_1 z - ... - c_k z^k has every root strictly outside the
/// unit circle (checked with the step-down Levinson recursion).
[[nodiscard]] bool is_stationary(std::span<const double> coefficients);

/// Maps unconstrained reals onto the stationary region: tanh gives partial
/// autocorrelations in (-1, 1), then the Levinson recursion turns them into
/// polynomial coefficients. Used for AR coefficients and, with the subtractive
/// MA sign, for invertible MA coefficients alike.
[[nodiscard]] std::vector<double> constrain(std::span<const double> raw);

/// Exact Gaussian log-likelihood of the ARMA(p, q) part of `order` on `values`
/// (already differenced d times; `params.mu` is subtracted here).
[[nodiscard]] double log_likelihood(const ArimaParams& params, const ArimaOrder& order,
                                    std::span<const double> values);

/// Whether the process mean mu is estimated. `Auto` estimates it only for
/// d == 0, so an undifferenced model has a level and a differenced one has no
/// drift (ARIMA(0,1,0) is then the plain random walk).
enum class MeanTerm { Auto, Always, Never };

struct FitOptions {
    NelderMeadOptions optimizer{};
    MeanTerm mean = MeanTerm::Auto;
};

[[nodiscard]] bool estimates_mean(MeanTerm mean, int d) noexcept;

struct FittedModel {
    ArimaOrder order;
    ArimaParams params;
    double loglik = 0.0;
    std::vector<double> residuals;  // one-step innovations on the differenced scale
    std::vector<double> heads;      // differencing heads, see DifferencedSeries
    std::size_t n_obs = 0;          // length of the original series
    bool has_mean = true;           // mu was estimated (otherwise fixed at 0)
    TimeSeries series;              // the data the model was fitted to
    bool converged = false;         // optimizer met its tolerance
    int iterations = 0;
};

/// Maximum-likelihood fit of ARIMA(p, d, q). The mean (when estimated) and
/// the innovation variance are profiled out in closed form; Nelder-Mead
/// searches the remaining p + q unconstrained coefficients starting from zero.
[[nodiscard]] FittedModel fit(const TimeSeries& series, const ArimaOrder& order, const FitOptions& options = {});

[[nodiscard]] std::vector<double> residuals(const FittedModel& model);

/// Standard normal draws: 64-bit Mersenne Twister, 53-bit uniforms, basic
/// Box-Muller, both variates of each pair used in order. Unlike
/// std::normal_distribution the stream is identical on every platform.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed);
    double next();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Draws n observations of ARIMA(p, d, q). A burn-in of 100 * max(p, q, 1)
/// steps precedes the kept sample; the ARMA output is then cumulatively
/// summed d times. sigma2 == 0 is allowed and yields a deterministic path.
[[nodiscard]] TimeSeries simulate(const ArimaParams& params, const ArimaOrder& order, std::size_t n,
                                  std::uint64_t seed);

namespace detail {

/// Output of the innovations filter run with unit innovation variance.
struct FilterPass {
    std::vector<double> innovations;  // v_t
    std::vector<double> variances;    // F_t (multiply by sigma2 for the real scale)
    std::vector<double> state;        // predicted state for the step after the data
    std::vector<double> state_cov;    // its covariance (m x m, row-major, unit sigma2)
};

/// State-space form of ARMA(p, q) with dimension m = max(p, q + 1).
struct ArmaStateSpace {
    std::size_t m = 1;
    std::vector<double> phi;    // first column of the transition, padded to m
    std::vector<double> theta;  // R = (1, theta_1, ..., theta_{m-1}), conventional MA sign
    std::vector<double> p0;     // stationary state covariance (m x m), unit sigma2

    ArmaStateSpace(std::span<const double> beta, std::span<const double> alpha);
};

/// Runs the filter on `values - offset`, with unit innovation variance.
[[nodiscard]] FilterPass filter(const ArmaStateSpace& ss, std::span<const double> values, double offset);

/// Profile fit at fixed coefficients: GLS mean (or zero), MLE variance and
/// the maximized log-likelihood.
struct Profile {
    double mu = 0.0;
    double sigma2 = 0.0;
    double loglik = 0.0;
};
[[nodiscard]] Profile profile(const ArmaStateSpace& ss, std::span<const double> values, bool estimate_mean = true);

}  // namespace detail

}  // namespace bj

#include "boxjenkins/model.hpp"

#include "boxjenkins/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace bj {

void ArimaOrder::validate() const {
    if (p < 0 || q < 0 || p > kMaxArmaOrder || q > kMaxArmaOrder) {
        throw InvalidArgument("ARMA orders must lie in [0, 5], got " + to_string());
    }
    if (d < 0 || d > kMaxDifferencing) {
        throw InvalidArgument("differencing order must lie in [0, 2], got " + to_string());
    }
}

std::string ArimaOrder::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")";
}

double ArimaParams::beta0() const {
    double s = 0.0;
    for (double b : beta) {
        s += b;
    }
    return mu * (1.0 - s);
}

std::vector<double> ArimaParams::conventional_ma() const {
    std::vector<double> theta(alpha.size());
    std::transform(alpha.begin(), alpha.end(), theta.begin(), [](double a) { return -a; });
    return theta;
}

void ArimaParams::validate(const ArimaOrder& order, bool allow_zero_variance) const {
    order.validate();
    if (beta.size() != static_cast<std::size_t>(order.p) || alpha.size() != static_cast<std::size_t>(order.q)) {
        throw ModelError("parameter counts do not match order " + order.to_string());
    }
    if (!std::isfinite(mu) || !std::isfinite(sigma2) || sigma2 < 0.0 || (sigma2 == 0.0 && !allow_zero_variance)) {
        throw ModelError("innovation variance must be positive and parameters finite");
    }
    if (!is_stationary(beta)) {
        throw ModelError("AR polynomial is not stationary");
    }
    if (!is_stationary(alpha)) {
        throw ModelError("MA polynomial is not invertible");
    }
}

bool is_stationary(std::span<const double> coefficients) {
    std::vector<double> a(coefficients.begin(), coefficients.end());
    for (double c : a) {
        if (!std::isfinite(c)) {
            return false;
        }
    }
    // Step down from order k to k-1; the polynomial is stationary iff every
    // partial autocorrelation met on the way has modulus below one.
    for (std::size_t k = a.size(); k > 0; --k) {
        const double r = a[k - 1];
        if (!(std::abs(r) < 1.0)) {
            return false;
        }
        const double denom = 1.0 - r * r;
        std::vector<double> next(k - 1);
        for (std::size_t j = 0; j + 1 < k; ++j) {
            next[j] = (a[j] + r * a[k - 2 - j]) / denom;
        }
        a = std::move(next);
    }
    return true;
}

std::vector<double> constrain(std::span<const double> raw) {
    std::vector<double> coef;
    coef.reserve(raw.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
        const double r = std::tanh(raw[k]);
        std::vector<double> next(k + 1);
        for (std::size_t j = 0; j < k; ++j) {
            next[j] = coef[j] - r * coef[k - 1 - j];
        }
        next[k] = r;
        coef = std::move(next);
    }
    return coef;
}

namespace detail {

ArmaStateSpace::ArmaStateSpace(std::span<const double> beta, std::span<const double> alpha) {
    m = std::max(beta.size(), alpha.size() + 1);
    phi.assign(m, 0.0);
    std::copy(beta.begin(), beta.end(), phi.begin());
    theta.assign(m, 0.0);
    theta[0] = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        theta[j + 1] = -alpha[j];
    }

    // Stationary covariance: P = T P T' + R R', solved as
    // (I - T (x) T) vec(P) = vec(R R').
    Eigen::MatrixXd transition = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        transition(static_cast<Eigen::Index>(i), 0) = phi[i];
        if (i + 1 < m) {
            transition(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = 1.0;
        }
    }
    const auto mm = static_cast<Eigen::Index>(m * m);
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(mm, mm);
    Eigen::VectorXd rhs(mm);
    const auto dim = static_cast<Eigen::Index>(m);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            rhs(i * dim + j) = theta[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(j)];
            for (Eigen::Index k = 0; k < dim; ++k) {
                for (Eigen::Index l = 0; l < dim; ++l) {
                    system(i * dim + j, k * dim + l) -= transition(i, k) * transition(j, l);
                }
            }
        }
    }
    const Eigen::VectorXd solution = system.partialPivLu().solve(rhs);
    if (!solution.allFinite()) {
        throw ModelError("stationary state covariance is not finite");
    }
    p0.assign(solution.data(), solution.data() + solution.size());
    // symmetrize against round-off
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double avg = 0.5 * (p0[i * m + j] + p0[j * m + i]);
            p0[i * m + j] = avg;
            p0[j * m + i] = avg;
        }
    }
}

namespace {

// Shared pass over one or more series with the same model. Gains and
// variances do not depend on the data, so filtering the observations and a
// column of ones together costs little more than one pass.
struct MultiPass {
    std::vector<std::vector<double>> innovations;
    std::vector<std::vector<double>> states;
    std::vector<double> variances;
    std::vector<double> state_cov;
};

MultiPass filter_many(const ArmaStateSpace& ss, std::span<const std::span<const double>> inputs,
                      std::span<const double> offsets) {
    const std::size_t m = ss.m;
    const std::size_t count = inputs.size();
    const std::size_t n = count ? inputs[0].size() : 0;

    MultiPass out;
    out.innovations.assign(count, std::vector<double>(n));
    out.states.assign(count, std::vector<double>(m, 0.0));
    out.variances.resize(n);

    std::vector<double> p = ss.p0;
    std::vector<double> tp(m * m), next(m * m), gain(m);
    bool steady = false;

    for (std::size_t t = 0; t < n; ++t) {
        const double f = p[0];
        if (!(f > 0.0) || !std::isfinite(f)) {
            throw ModelError("non-positive innovation variance in filter");
        }
        out.variances[t] = f;

        // K = T P e_0 / F
        for (std::size_t i = 0; i < m; ++i) {
            gain[i] = (ss.phi[i] * p[0] + (i + 1 < m ? p[(i + 1) * m] : 0.0)) / f;
        }
        for (std::size_t s = 0; s < count; ++s) {
            auto& a = out.states[s];
            const double v = (inputs[s][t] - offsets[s]) - a[0];
            out.innovations[s][t] = v;
            const double a0 = a[0];
            for (std::size_t i = 0; i < m; ++i) {
                a[i] = ss.phi[i] * a0 + (i + 1 < m ? a[i + 1] : 0.0) + gain[i] * v;
            }
        }
        if (steady) {
            continue;
        }

        // P <- T P T' + R R' - K K' F
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                tp[i * m + j] = ss.phi[i] * p[j] + (i + 1 < m ? p[(i + 1) * m + j] : 0.0);
            }
        }
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const double tpt = tp[i * m] * ss.phi[j] + (j + 1 < m ? tp[i * m + j + 1] : 0.0);
                next[i * m + j] = tpt + ss.theta[i] * ss.theta[j] - gain[i] * gain[j] * f;
                change = std::max(change, std::abs(next[i * m + j] - p[i * m + j]));
            }
        }
        p.swap(next);
        if (change < 1e-15) {
            steady = true;
        }
    }
    out.state_cov = std::move(p);
    return out;
}

}  // namespace

FilterPass filter(const ArmaStateSpace& ss, std::span<const double> values, double offset) {
    const std::span<const double> inputs[] = {values};
    const double offsets[] = {offset};
    MultiPass pass = filter_many(ss, inputs, offsets);
    return {std::move(pass.innovations[0]), std::move(pass.variances), std::move(pass.states[0]),
            std::move(pass.state_cov)};
}

Profile profile(const ArmaStateSpace& ss, std::span<const double> values, bool estimate_mean) {
    const std::vector<double> ones(values.size(), 1.0);
    const std::span<const double> inputs[] = {values, ones};
    const double offsets[] = {0.0, 0.0};
    const MultiPass pass = filter_many(ss, std::span(inputs).first(estimate_mean ? 2 : 1), offsets);

    const auto& vy = pass.innovations[0];
    double logdet = 0.0;
    for (double f : pass.variances) {
        logdet += std::log(f);
    }
    Profile out;
    if (estimate_mean) {
        const auto& v1 = pass.innovations[1];
        double cross = 0.0;
        double info = 0.0;
        for (std::size_t t = 0; t < values.size(); ++t) {
            cross += v1[t] * vy[t] / pass.variances[t];
            info += v1[t] * v1[t] / pass.variances[t];
        }
        if (!(info > 0.0)) {
            throw ModelError("mean is not identifiable");
        }
        out.mu = cross / info;
    }
    double ss_res = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        const double v = estimate_mean ? vy[t] - out.mu * pass.innovations[1][t] : vy[t];
        ss_res += v * v / pass.variances[t];
    }
    const double n = static_cast<double>(values.size());
    out.sigma2 = ss_res / n;
    if (!(out.sigma2 > 0.0)) {
        throw ModelError("zero residual variance");
    }
    out.loglik = -0.5 * n * (std::log(2.0 * std::numbers::pi) + 1.0 + std::log(out.sigma2)) - 0.5 * logdet;
    return out;
}

}  // namespace detail

double log_likelihood(const ArimaParams& params, const ArimaOrder& order, std::span<const double> values) {
    params.validate(order);
    const detail::ArmaStateSpace ss(params.beta, params.alpha);
    const detail::FilterPass pass = detail::filter(ss, values, params.mu);
    double ll = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        const double var = params.sigma2 * pass.variances[t];
        ll -= 0.5 * (std::log(2.0 * std::numbers::pi * var) + pass.innovations[t] * pass.innovations[t] / var);
    }
    return ll;
}

bool estimates_mean(MeanTerm mean, int d) noexcept {
    switch (mean) {
        case MeanTerm::Always:
            return true;
        case MeanTerm::Never:
            return false;
        case MeanTerm::Auto:
            break;
    }
    return d == 0;
}

FittedModel fit(const TimeSeries& series, const ArimaOrder& order, const FitOptions& options) {
    order.validate();
    const std::size_t needed = static_cast<std::size_t>(order.d + order.p + order.q + 3);
    if (series.size() < needed) {
        throw InsufficientData("ARIMA" + order.to_string() + " needs at least " + std::to_string(needed) +
                               " observations, got " + std::to_string(series.size()));
    }
    const DifferencedSeries diff = difference(series, order.d);
    if (!(summary(diff.values).variance > 0.0)) {
        throw DegenerateSeries("differenced series has zero variance");
    }

    const bool with_mean = estimates_mean(options.mean, order.d);
    const auto p = static_cast<std::size_t>(order.p);
    const auto split = [p](std::span<const double> x) {
        return std::pair{constrain(x.subspan(0, p)), constrain(x.subspan(p))};
    };
    const auto objective = [&](std::span<const double> x) {
        try {
            const auto [beta, alpha] = split(x);
            return -detail::profile(detail::ArmaStateSpace(beta, alpha), diff.values, with_mean).loglik;
        } catch (const ModelError&) {
            return std::numeric_limits<double>::infinity();
        }
    };

    const NelderMeadResult opt =
        nelder_mead(objective, std::vector<double>(static_cast<std::size_t>(order.p + order.q), 0.0), options.optimizer);
    if (!std::isfinite(opt.value)) {
        throw ModelError("optimizer found no finite likelihood for ARIMA" + order.to_string());
    }

    auto [beta, alpha] = split(opt.x);
    const detail::ArmaStateSpace ss(beta, alpha);
    const detail::Profile prof = detail::profile(ss, diff.values, with_mean);

    FittedModel model{.order = order,
                      .params = {prof.mu, std::move(beta), std::move(alpha), prof.sigma2},
                      .loglik = prof.loglik,
                      .residuals = {},
                      .heads = diff.heads,
                      .n_obs = series.size(),
                      .has_mean = with_mean,
                      .series = series,
                      .converged = opt.converged,
                      .iterations = opt.iterations};
    model.residuals = detail::filter(ss, diff.values, prof.mu).innovations;
    return model;
}

std::vector<double> residuals(const FittedModel& model) { return model.residuals; }

GaussianStream::GaussianStream(std::uint64_t seed) : engine_(seed) {}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    // u1 in (0, 1], u2 in [0, 1)
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * kScale;
    const double u2 = static_cast<double>(engine_() >> 11) * kScale;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

TimeSeries simulate(const ArimaParams& params, const ArimaOrder& order, std::size_t n, std::uint64_t seed) {
    params.validate(order, true);
    if (n == 0) {
        throw InvalidArgument("simulation length must be positive");
    }
    const auto p = static_cast<std::size_t>(order.p);
    const auto q = static_cast<std::size_t>(order.q);
    const std::size_t burn = 100 * std::max({p, q, std::size_t{1}});
    const double sd = std::sqrt(params.sigma2);

    GaussianStream noise(seed);
    std::vector<double> dev(burn + n, 0.0);  // deviations from mu
    std::vector<double> shocks(burn + n, 0.0);
    for (std::size_t t = 0; t < burn + n; ++t) {
        const double u = sd * noise.next();
        double x = u;
        for (std::size_t i = 1; i <= p && i <= t; ++i) {
            x += params.beta[i - 1] * dev[t - i];
        }
        for (std::size_t j = 1; j <= q && j <= t; ++j) {
            x -= params.alpha[j - 1] * shocks[t - j];
        }
        dev[t] = x;
        shocks[t] = u;
    }
    std::vector<double> values(n);
    for (std::size_t t = 0; t < n; ++t) {
        values[t] = params.mu + dev[burn + t];
    }
    for (int k = 0; k < order.d; ++k) {
        for (std::size_t t = 1; t < n; ++t) {
            values[t] += values[t - 1];
        }
    }
    return TimeSeries::from_values(std::move(values));
}

}  // namespace bj

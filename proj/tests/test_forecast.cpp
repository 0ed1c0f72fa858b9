#include "boxjenkins/error.hpp"
#include "boxjenkins/forecast.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace bj;

namespace {

TimeSeries random_walk(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> d(0.3, 2.0);
    std::vector<double> v(n);
    double level = 100.0;
    for (double& x : v) {
        level += d(rng);
        x = level;
    }
    return TimeSeries::from_values(v);
}

// psi weights of the ARIMA model in the subtractive MA sign:
// (1 - B)^d (1 - sum beta B^i) psi(B) = 1 - sum alpha B^j
std::vector<double> arima_psi(const ArimaParams& params, int d, std::size_t count) {
    std::vector<double> ar(params.beta.begin(), params.beta.end());
    for (int k = 0; k < d; ++k) {  // multiply AR polynomial by (1 - B)
        // 1 - sum c_i B^i, times (1 - B), back in the "- c" form
        std::vector<double> full(ar.size() + 1);
        full[0] = 1.0;
        for (std::size_t i = 0; i < ar.size(); ++i) {
            full[i + 1] = -ar[i];
        }
        std::vector<double> prod(full.size() + 1, 0.0);
        for (std::size_t i = 0; i < full.size(); ++i) {
            prod[i] += full[i];
            prod[i + 1] -= full[i];
        }
        ar.assign(prod.size() - 1, 0.0);
        for (std::size_t i = 1; i < prod.size(); ++i) {
            ar[i - 1] = -prod[i];
        }
    }
    std::vector<double> psi(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
        double v = k == 0 ? 1.0 : 0.0;
        if (k >= 1 && k <= params.alpha.size()) {
            v -= params.alpha[k - 1];
        }
        for (std::size_t i = 1; i <= ar.size() && i <= k; ++i) {
            v += ar[i - 1] * psi[k - i];
        }
        psi[k] = v;
    }
    return psi;
}

}  // namespace

TEST_CASE("random walk forecasts repeat the last observation") {
    const auto s = random_walk(1, 60);
    const auto m = fit(s, {0, 1, 0});
    const auto fc = forecast(m, 50);
    const double last = s.values().back();
    for (int t = 0; t < 50; ++t) {
        CHECK(fc.points[static_cast<std::size_t>(t)] == last);
        CHECK(fc.se[static_cast<std::size_t>(t)] ==
              doctest::Approx(std::sqrt(m.params.sigma2 * (t + 1))).epsilon(1e-12));
    }
}

TEST_CASE("white-noise forecasts are the mean with constant spread") {
    const auto s = simulate({4.0, {}, {}, 2.0}, {0, 0, 0}, 200, 3);
    const auto m = fit(s, {0, 0, 0});
    const auto fc = forecast(m, 7, 0.9);
    for (std::size_t t = 0; t < 7; ++t) {
        CHECK(fc.points[t] == doctest::Approx(m.params.mu).epsilon(1e-15));
        CHECK(fc.se[t] == doctest::Approx(std::sqrt(m.params.sigma2)).epsilon(1e-14));
    }
    CHECK(fc.level == 0.9);
    CHECK(fc.horizon == 7);
}

TEST_CASE("AR(1) forecasts follow the closed-form predictor") {
    const auto s = simulate({10.0, {0.6}, {}, 1.0}, {1, 0, 0}, 300, 21);
    const auto m = fit(s, {1, 0, 0});
    const auto fc = forecast(m, 25);
    const double mu = m.params.mu;
    const double phi = m.params.beta[0];
    const double yn = s.values().back();
    for (int t = 1; t <= 25; ++t) {
        CHECK(std::abs(fc.points[static_cast<std::size_t>(t - 1)] - (mu + std::pow(phi, t) * (yn - mu))) <= 1e-10);
    }
}

TEST_CASE("standard errors match psi weights once the filter is steady") {
    struct Case {
        ArimaParams truth;
        ArimaOrder order;
    };
    const std::vector<Case> cases{{{0.0, {0.5}, {-0.3}, 1.0}, {1, 1, 1}},
                                  {{0.0, {0.4, -0.2}, {}, 1.0}, {2, 2, 0}},
                                  {{0.0, {0.7}, {0.2}, 1.0}, {1, 0, 1}}};
    for (const auto& c : cases) {
        const auto s = simulate(c.truth, c.order, 600, 8);
        const auto m = fit(s, c.order);
        const auto fc = forecast(m, 12);
        const auto psi = arima_psi(m.params, c.order.d, 12);
        double cum = 0.0;
        for (std::size_t t = 0; t < 12; ++t) {
            cum += psi[t] * psi[t];
            CHECK(fc.se[t] == doctest::Approx(std::sqrt(m.params.sigma2 * cum)).epsilon(1e-8));
        }
    }
}

TEST_CASE("forecast invariants") {
    const auto s = simulate({0.0, {0.5}, {0.4}, 1.0}, {1, 1, 1}, 300, 4);
    const auto m = fit(s, {1, 1, 1});
    const auto narrow = forecast(m, 30, 0.95);
    const auto wide = forecast(m, 30, 0.99);
    for (std::size_t t = 0; t < 30; ++t) {
        CHECK(narrow.lower[t] <= narrow.points[t]);
        CHECK(narrow.points[t] <= narrow.upper[t]);
        CHECK(wide.lower[t] <= narrow.lower[t]);
        CHECK(wide.upper[t] >= narrow.upper[t]);
        if (t > 0) {
            CHECK(narrow.se[t] >= narrow.se[t - 1]);
        }
    }

    const auto st = simulate({5.0, {0.9}, {}, 1.0}, {1, 0, 0}, 400, 5);
    const auto ms = fit(st, {1, 0, 0});
    REQUIRE(std::abs(ms.params.beta[0]) <= 0.9 + 0.05);
    const auto far = forecast(ms, 200);
    CHECK(std::abs(far.points.back() - ms.params.mu) < 1e-6);
}

TEST_CASE("forecast argument errors") {
    const auto m = fit(random_walk(2, 30), {0, 1, 0});
    CHECK_THROWS_AS((void)forecast(m, 0), InvalidArgument);
    CHECK_THROWS_AS((void)forecast(m, 3, 1.0), InvalidArgument);
    CHECK_THROWS_AS((void)forecast(m, 3, 0.0), InvalidArgument);
}

TEST_CASE("prediction intervals cover the simulated future") {
    int covered = 0;
    int total = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto full = simulate({0.0, {0.6}, {}, 1.0}, {1, 1, 0}, 205, 60'000 + seed);
        const std::vector<double> head(full.values().begin(), full.values().begin() + 200);
        const auto m = fit(TimeSeries::from_values(head), {1, 1, 0});
        const auto fc = forecast(m, 5, 0.9);
        for (std::size_t j = 0; j < 5; ++j) {
            const double actual = full.values()[200 + j];
            covered += (actual >= fc.lower[j] && actual <= fc.upper[j]) ? 1 : 0;
            ++total;
        }
    }
    const double coverage = static_cast<double>(covered) / total;
    MESSAGE("empirical 90% coverage " << coverage);
    CHECK(coverage >= 0.8);
}

TEST_CASE("fitted values: random walk and white noise") {
    const auto s = random_walk(9, 40);
    const auto rw = fitted_values(fit(s, {0, 1, 0}));
    CHECK(rw.values.size() == 40);
    CHECK(rw.warmup == 2);
    CHECK(std::isnan(rw.values[0]));
    for (std::size_t t = 1; t < 40; ++t) {
        CHECK(rw.values[t] == s.values()[t - 1]);
    }

    const auto wn = simulate({2.0, {}, {}, 1.0}, {0, 0, 0}, 50, 10);
    const auto mw = fit(wn, {0, 0, 0});
    const auto fw = fitted_values(mw);
    CHECK(fw.warmup == 1);
    for (double v : fw.values) {
        CHECK(v == doctest::Approx(mw.params.mu).epsilon(1e-14));
    }
}

TEST_CASE("fitted values reproduce the residuals on the differenced scale") {
    for (const ArimaOrder order : {ArimaOrder{1, 0, 1}, ArimaOrder{1, 1, 1}, ArimaOrder{0, 2, 1}}) {
        ArimaParams truth{1.0, {}, {0.2}, 1.0};
        if (order.p > 0) {
            truth.beta = {0.3};
        }
        const auto s = simulate(truth, order, 150, 44);
        const auto m = fit(s, order);
        const auto fv = fitted_values(m);
        const auto y = s.values();
        const auto d = static_cast<std::size_t>(order.d);
        for (std::size_t t = d; t < y.size(); ++t) {
            CHECK(std::abs((y[t] - fv.values[t]) - m.residuals[t - d]) <= 1e-10);
        }
        for (std::size_t t = 0; t < d; ++t) {
            CHECK(std::isnan(fv.values[t]));
        }
    }
}

#include "boxjenkins/select.hpp"

#include "boxjenkins/error.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <optional>

namespace bj {

std::string_view to_string(Criterion c) noexcept { return c == Criterion::AIC ? "aic" : "bic"; }

double aic(double loglik, int n_params) { return -2.0 * loglik + 2.0 * n_params; }

double bic(double loglik, int n_params, std::size_t n) {
    if (n == 0) {
        throw InvalidArgument("BIC needs a positive sample size");
    }
    return -2.0 * loglik + n_params * std::log(static_cast<double>(n));
}

int parameter_count(const FittedModel& model) noexcept {
    return model.order.p + model.order.q + 1 + (model.has_mean ? 1 : 0);
}

double criterion_value(const FittedModel& model, Criterion c) {
    const int k = parameter_count(model);
    return c == Criterion::AIC ? aic(model.loglik, k) : bic(model.loglik, k, model.residuals.size());
}

bool ranks_before(const SelectionRow& a, const SelectionRow& b) noexcept {
    if (a.criterion != b.criterion) {
        return a.criterion < b.criterion;
    }
    const int sa = a.order.p + a.order.q;
    const int sb = b.order.p + b.order.q;
    if (sa != sb) {
        return sa < sb;
    }
    return a.order.p < b.order.p;
}

SelectionResult grid_search(const TimeSeries& series, int d, const GridOptions& options) {
    if (options.p_max < 0 || options.q_max < 0 || options.p_max > kMaxArmaOrder || options.q_max > kMaxArmaOrder) {
        throw InvalidArgument("grid bounds must lie in [0, 5]");
    }
    std::vector<ArimaOrder> grid;
    for (int p = 0; p <= options.p_max; ++p) {
        for (int q = 0; q <= options.q_max; ++q) {
            grid.push_back({p, d, q});
        }
    }

    const auto attempt = [&](const ArimaOrder& order) -> std::optional<FittedModel> {
        try {
            FittedModel m = fit(series, order, options.fit);
            if (std::isfinite(m.loglik)) {
                return m;
            }
        } catch (const Error&) {
        }
        return std::nullopt;
    };

    std::vector<std::optional<FittedModel>> fits(grid.size());
    if (options.parallel) {
        std::vector<std::future<std::optional<FittedModel>>> pending;
        pending.reserve(grid.size());
        for (const ArimaOrder& order : grid) {
            pending.push_back(std::async(std::launch::async, attempt, order));
        }
        for (std::size_t i = 0; i < grid.size(); ++i) {
            fits[i] = pending[i].get();
        }
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            fits[i] = attempt(grid[i]);
        }
    }

    std::vector<SelectionRow> table;
    std::optional<std::size_t> best;
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SelectionRow row{grid[i], kNaN, kNaN, false};
        if (fits[i]) {
            row.criterion = criterion_value(*fits[i], options.criterion);
            row.loglik = fits[i]->loglik;
            row.converged = std::isfinite(row.criterion);
        }
        table.push_back(row);
        if (row.converged && (!best || ranks_before(table[i], table[*best]))) {
            best = i;
        }
    }
    if (!best) {
        throw ModelError("no candidate order could be fitted");
    }
    return SelectionResult{std::move(*fits[*best]), options.criterion, std::move(table)};
}

}  // namespace bj

#pragma once

#include "boxjenkins/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace bj {

enum class Criterion { AIC, BIC };

[[nodiscard]] std::string_view to_string(Criterion c) noexcept;

[[nodiscard]] double aic(double loglik, int n_params);
[[nodiscard]] double bic(double loglik, int n_params, std::size_t n);

/// Free parameters of a fitted model: p + q, sigma2, and the mean when it was
/// estimated.
[[nodiscard]] int parameter_count(const FittedModel& model) noexcept;

/// Criterion value of a fitted model; n is the differenced sample size.
[[nodiscard]] double criterion_value(const FittedModel& model, Criterion c);

struct SelectionRow {
    ArimaOrder order;
    double criterion = 0.0;  // NaN when not converged
    double loglik = 0.0;     // NaN when not converged
    bool converged = false;  // fit succeeded with a finite likelihood
};

/// Selection order among converged rows: lower criterion, then smaller
/// p + q, then smaller p.
[[nodiscard]] bool ranks_before(const SelectionRow& a, const SelectionRow& b) noexcept;

struct SelectionResult {
    FittedModel best;
    Criterion criterion = Criterion::BIC;
    std::vector<SelectionRow> table;  // (p, q) in row-major grid order
};

struct GridOptions {
    int p_max = 3;
    int q_max = 3;
    Criterion criterion = Criterion::BIC;
    FitOptions fit{};
    bool parallel = true;
};

/// Fits every (p, d, q) with p <= p_max, q <= q_max and keeps the minimal
/// criterion. Ties go to smaller p + q, then smaller p. Candidates that
/// cannot be fitted are kept in the table with converged = false.
/// Throws ModelError if no candidate could be fitted.
[[nodiscard]] SelectionResult grid_search(const TimeSeries& series, int d, const GridOptions& options = {});

}  // namespace bj

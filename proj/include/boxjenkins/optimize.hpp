#pragma once

#include <functional>
#include <span>
#include <vector>

namespace bj {

struct NelderMeadOptions {
    double initial_step = 0.1;  // offset of each non-start vertex along one axis
    double tolerance = 1e-10;   // stop once max f - min f over the simplex drops below this
    int max_iterations = 0;     // 0 means 200 * dim
    int restarts = 1;           // extra runs, each from a fresh simplex around the incumbent
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;  // the last run met the tolerance
};

/// Minimizes `f` from `start`. Non-finite objective values are treated as
/// +infinity, so callers can signal infeasible points by returning NaN/inf.
/// Fully deterministic: no randomized steps.
[[nodiscard]] NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                                           std::vector<double> start,
                                           const NelderMeadOptions& options = {});

}  // namespace bj

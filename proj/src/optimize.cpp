#include "boxjenkins/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bj {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

struct Run {
    std::vector<double> x;
    double value;
    int iterations;
    int evaluations;
    bool converged;
};

Run run_once(const std::function<double(std::span<const double>)>& f, const std::vector<double>& start,
             const NelderMeadOptions& options, int max_iterations) {
    const std::size_t dim = start.size();
    int evaluations = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evaluations;
        const double v = f(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    std::vector<std::vector<double>> vertex(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) {
        vertex[i + 1][i] += options.initial_step;
    }
    std::vector<double> fv(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        fv[i] = eval(vertex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto along = [&](double t, std::vector<double>& out, const std::vector<double>& worst) {
        for (std::size_t j = 0; j < dim; ++j) {
            out[j] = centroid[j] + t * (worst[j] - centroid[j]);
        }
    };

    int iter = 0;
    bool converged = false;
    for (;; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        // stable sort keeps ties in vertex order, which keeps runs reproducible
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second = order[dim - 1];
        if (std::isfinite(fv[worst]) && fv[worst] - fv[best] < options.tolerance) {
            converged = true;
            break;
        }
        if (iter >= max_iterations) {
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                centroid[j] += vertex[i][j];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(dim);
        }

        along(-kReflect, trial, vertex[worst]);
        const double f_reflect = eval(trial);
        if (f_reflect < fv[best]) {
            along(-kReflect * kExpand, trial2, vertex[worst]);
            const double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                vertex[worst] = trial2;
                fv[worst] = f_expand;
            } else {
                vertex[worst] = trial;
                fv[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < fv[second]) {
            vertex[worst] = trial;
            fv[worst] = f_reflect;
            continue;
        }
        // contraction: outside if the reflection improved on the worst, inside otherwise
        const bool outside = f_reflect < fv[worst];
        along(outside ? -kContract : kContract, trial2, vertex[worst]);
        const double f_contract = eval(trial2);
        if (f_contract < (outside ? f_reflect : fv[worst])) {
            vertex[worst] = trial2;
            fv[worst] = f_contract;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t j = 0; j < dim; ++j) {
                vertex[i][j] = vertex[best][j] + kShrink * (vertex[i][j] - vertex[best][j]);
            }
            fv[i] = eval(vertex[i]);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    return {vertex[best], fv[best], iter, evaluations, converged};
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> start,
                             const NelderMeadOptions& options) {
    NelderMeadResult result;
    if (start.empty()) {
        result.value = f(start);
        result.evaluations = 1;
        result.converged = std::isfinite(result.value);
        return result;
    }
    const int cap = options.max_iterations > 0 ? options.max_iterations : 200 * static_cast<int>(start.size());

    result.x = std::move(start);
    for (int run = 0; run <= options.restarts; ++run) {
        Run r = run_once(f, result.x, options, cap);
        result.iterations += r.iterations;
        result.evaluations += r.evaluations;
        if (run == 0 || r.value <= result.value) {
            result.x = std::move(r.x);
            result.value = r.value;
        }
        result.converged = r.converged;
    }
    return result;
}

}  // namespace bj

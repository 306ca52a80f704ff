#include "exmoves/svm_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exmoves/errors.hpp"

namespace exmoves {

namespace {

constexpr double kTau = 1e-12;

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

double svm_objective(std::span<const SvmExample> examples, std::span<const double> weights,
                     double bias, double c_pos, double c_neg) {
    double obj = dot(weights, weights);
    for (const auto& ex : examples) {
        const double f = dot(ex.phi, weights) + bias;
        if (ex.label > 0)
            obj += c_pos * std::max(0.0, 1.0 - f);
        else
            obj += c_neg * std::max(0.0, 1.0 + f);
    }
    return obj;
}

SvmSolution solve_linear_svm(std::span<const SvmExample> examples, double c_pos, double c_neg,
                             const SvmSolverOptions& options) {
    const std::size_t n = examples.size();
    if (c_pos <= 0.0 || c_neg <= 0.0)
        throw ContractError("solve_linear_svm: costs must be positive");

    std::size_t npos = 0, nneg = 0, dim = 0;
    for (const auto& ex : examples) {
        (ex.label > 0 ? npos : nneg)++;
        if (dim == 0)
            dim = ex.phi.size();
        else if (ex.phi.size() != dim)
            throw IncompatibilityError("solve_linear_svm: inconsistent feature lengths");
    }
    if (npos == 0 || nneg == 0)
        throw DegenerateSetError("solve_linear_svm: need at least one example per label");

    // The hinge objective carries ||w||^2 rather than the conventional
    // ||w||^2 / 2, so the per-example box bounds are halved.
    std::vector<double> cap(n);
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = examples[i].label > 0 ? 1 : -1;
        cap[i] = (y[i] > 0 ? c_pos : c_neg) / 2.0;
    }

    // Full Gram cache; active sets and descriptor batches stay small enough.
    std::vector<double> gram(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double k = dot(examples[i].phi, examples[j].phi);
            gram[i * n + j] = k;
            gram[j * n + i] = k;
        }
    }
    auto kernel = [&](std::size_t i, std::size_t j) { return gram[i * n + j]; };

    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n, -1.0); // gradient of the dual: (Q alpha)_i - 1

    auto in_up = [&](std::size_t i) {
        return (y[i] > 0 && alpha[i] < cap[i]) || (y[i] < 0 && alpha[i] > 0.0);
    };
    auto in_low = [&](std::size_t i) {
        return (y[i] > 0 && alpha[i] > 0.0) || (y[i] < 0 && alpha[i] < cap[i]);
    };

    SvmSolution sol;
    std::uint64_t iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        // maximal violating pair
        double gmax = -std::numeric_limits<double>::infinity();
        double gmin = std::numeric_limits<double>::infinity();
        std::size_t i = n, j = n;
        for (std::size_t t = 0; t < n; ++t) {
            const double v = -y[t] * grad[t];
            if (in_up(t) && v > gmax) {
                gmax = v;
                i = t;
            }
            if (in_low(t) && v < gmin) {
                gmin = v;
                j = t;
            }
        }
        if (i == n || j == n || gmax - gmin < options.epsilon) {
            sol.converged = true;
            break;
        }

        const double old_ai = alpha[i], old_aj = alpha[j];
        if (y[i] != y[j]) {
            double quad = kernel(i, i) + kernel(j, j) + 2.0 * kernel(i, j);
            if (quad <= 0.0)
                quad = kTau;
            const double delta = (-grad[i] - grad[j]) / quad;
            const double diff = alpha[i] - alpha[j];
            alpha[i] += delta;
            alpha[j] += delta;
            if (diff > 0.0) {
                if (alpha[j] < 0.0) {
                    alpha[j] = 0.0;
                    alpha[i] = diff;
                }
            } else {
                if (alpha[i] < 0.0) {
                    alpha[i] = 0.0;
                    alpha[j] = -diff;
                }
            }
            if (diff > cap[i] - cap[j]) {
                if (alpha[i] > cap[i]) {
                    alpha[i] = cap[i];
                    alpha[j] = cap[i] - diff;
                }
            } else {
                if (alpha[j] > cap[j]) {
                    alpha[j] = cap[j];
                    alpha[i] = cap[j] + diff;
                }
            }
        } else {
            double quad = kernel(i, i) + kernel(j, j) - 2.0 * kernel(i, j);
            if (quad <= 0.0)
                quad = kTau;
            const double delta = (grad[i] - grad[j]) / quad;
            const double sum = alpha[i] + alpha[j];
            alpha[i] -= delta;
            alpha[j] += delta;
            if (sum > cap[i]) {
                if (alpha[i] > cap[i]) {
                    alpha[i] = cap[i];
                    alpha[j] = sum - cap[i];
                }
            } else {
                if (alpha[j] < 0.0) {
                    alpha[j] = 0.0;
                    alpha[i] = sum;
                }
            }
            if (sum > cap[j]) {
                if (alpha[j] > cap[j]) {
                    alpha[j] = cap[j];
                    alpha[i] = sum - cap[j];
                }
            } else {
                if (alpha[i] < 0.0) {
                    alpha[i] = 0.0;
                    alpha[j] = sum;
                }
            }
        }

        const double d_i = alpha[i] - old_ai;
        const double d_j = alpha[j] - old_aj;
        if (d_i == 0.0 && d_j == 0.0) {
            // numerically stuck on a degenerate pair
            sol.converged = true;
            break;
        }
        for (std::size_t t = 0; t < n; ++t)
            grad[t] += y[t] * (y[i] * kernel(t, i) * d_i + y[j] * kernel(t, j) * d_j);
    }
    sol.iterations = iter;

    sol.weights.assign(dim, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        if (alpha[t] == 0.0)
            continue;
        const double coef = alpha[t] * y[t];
        for (std::size_t d = 0; d < dim; ++d)
            sol.weights[d] += coef * examples[t].phi[d];
    }

    // bias from the KKT conditions: free support vectors pin it exactly,
    // otherwise take the midpoint of the feasible bracket
    double sum_free = 0.0;
    std::size_t n_free = 0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
        const double v = -y[t] * grad[t];
        if (alpha[t] > 0.0 && alpha[t] < cap[t]) {
            sum_free += v;
            ++n_free;
        } else {
            if (in_up(t))
                lo = std::max(lo, v);
            if (in_low(t))
                hi = std::min(hi, v);
        }
    }
    if (n_free > 0)
        sol.bias = sum_free / static_cast<double>(n_free);
    else if (std::isfinite(lo) && std::isfinite(hi))
        sol.bias = (lo + hi) / 2.0;
    else if (std::isfinite(lo))
        sol.bias = lo;
    else if (std::isfinite(hi))
        sol.bias = hi;
    else
        sol.bias = 0.0;

    sol.objective = svm_objective(examples, sol.weights, sol.bias, c_pos, c_neg);
    return sol;
}

} // namespace exmoves

#pragma once

#include <cmath>
#include <stdexcept>

namespace majorant {

/// Worst-case error denominator of the quadrature rule: 60 * 2^10.
inline constexpr double kQuadErrDenom = 61440.0;

/// Multiplicative slack applied whenever a computed quantity is compared
/// against an analytic budget; machine arithmetic is treated as exact at
/// this scale.
inline constexpr double kBudgetGuard = 1e-9;

/// computed <= budget, up to the floating-point guard.
inline bool within_budget(double computed, double budget) {
    return computed <= budget * (1.0 + kBudgetGuard);
}

/// computed > threshold, resisting the floating-point guard.
inline bool exceeds_strict(double computed, double threshold) {
    return computed > threshold * (1.0 + kBudgetGuard);
}

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0;  ///< fourth_bound / (60 * 2^10 * N^4)
    int nodes = 0;
    double fourth_bound = 0.0; ///< the sup |f''''| certificate input
};

/// Neumaier compensated accumulation; fixed left-to-right order keeps the
/// reduction deterministic.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline double quad_error_bound(double fourth_bound, int nodes) {
    const double n = nodes;
    return fourth_bound / (kQuadErrDenom * n * n * n * n);
}

/// Midpoint rule with second-derivative correction on [0, 1/2]:
///   integral ~ sum_{n=1..N} f((2n-1)/(4N)) / (2N) + fdd((2n-1)/(4N)) / (192 N^3),
/// exact for cubics on each cell; the true integral lies within
/// +/- fourth_bound / (60 * 2^10 * N^4) of the returned value.
template <class F, class F2>
QuadResult integrate(F&& f, F2&& fdd, double fourth_bound, int nodes) {
    if (nodes < 1) throw std::invalid_argument("integrate: node count must be positive");
    if (fourth_bound < 0.0 || !std::isfinite(fourth_bound))
        throw std::invalid_argument("integrate: bad fourth-derivative bound");
    const double dn = nodes;
    const double w0 = 1.0 / (2.0 * dn);
    const double w2 = 1.0 / (192.0 * dn * dn * dn);
    CompensatedSum acc;
    for (int n = 1; n <= nodes; ++n) {
        const double x = (2.0 * n - 1.0) / (4.0 * dn);
        acc.add(f(x) * w0);
        acc.add(fdd(x) * w2);
    }
    return {acc.value(), quad_error_bound(fourth_bound, nodes), nodes, fourth_bound};
}

/// Least N with fourth_bound / (60 * 2^10 * N^4) < target_err.
/// Fourth root first, then adjusted by direct check.
inline int min_steps(double fourth_bound, double target_err) {
    if (target_err <= 0.0) throw std::invalid_argument("min_steps: target must positive");
    if (fourth_bound < 0.0) throw std::invalid_argument("min_steps: negative bound");
    if (fourth_bound == 0.0) return 1;
    const double root = std::pow(fourth_bound / (kQuadErrDenom * target_err), 0.25);
    int n = std::max(1, static_cast<int>(std::ceil(root)) - 2);
    while (!(quad_error_bound(fourth_bound, n) < target_err)) ++n;
    return n;
}

}  // namespace majorant

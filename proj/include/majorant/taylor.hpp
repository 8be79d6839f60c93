#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "quadrature.hpp"
#include "trig_poly.hpp"

namespace majorant {

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline double fourth_bound_for(int k, double t, int j, const BoundLedger& lg) {
    return (k == 4) ? hiv_bound_k4(t, j, lg) : hiv_bound(plus_family(k), t, j, lg);
}

}  // namespace detail

struct DerivEstimate {
    double value = 0.0;
    double err = 0.0;          ///< sum of the two per-integral certificates
    int nodes = 0;
    double fourth_bound = 0.0;
};

/// j-th t-derivative of the power-integral difference
///   d(t) = int_0^{1/2} G_-^t - int_0^{1/2} G_+^t,
/// computed as the difference of two certified quadratures of G^t log^j G.
inline DerivEstimate d_deriv(int k, double t, int j, int nodes, const BoundLedger& ledger) {
    const double fb = detail::fourth_bound_for(k, t, j, ledger);
    const PowerLog spec{t, j};
    const PolyFamily fp = plus_family(k), fm = minus_family(k);
    auto qp = integrate([&](double x) { return integrand(fp, spec, x); },
                        [&](double x) { return integrand_dd(fp, spec, x); }, fb, nodes);
    auto qm = integrate([&](double x) { return integrand(fm, spec, x); },
                        [&](double x) { return integrand_dd(fm, spec, x); }, fb, nodes);
    return {qm.value - qp.value, qp.error_bound + qm.error_bound, nodes, fb};
}

struct PositivityResult {
    int j = 0;
    double t = 0.0;
    double delta = 0.0;     ///< per-integral error budget
    int n_star = 0;         ///< least N meeting the budget
    int nodes = 0;          ///< N actually used
    double fourth_bound = 0.0;
    double value = 0.0;
    double margin = 0.0;    ///< value - 2 delta
    bool budget_ok = false; ///< certified per-integral error within delta
    bool pass = false;
};

/// Certifies d^(j)(t) > 0: quadrature with enough nodes that each integral
/// carries error < delta, then value - 2 delta > 0.
inline PositivityResult positivity_lemma(int k, double t, int j, double delta,
                                         const BoundLedger& ledger, int base_nodes,
                                         int node_cap) {
    if (delta <= 0.0) throw std::invalid_argument("positivity_lemma: delta must be positive");
    PositivityResult r;
    r.j = j;
    r.t = t;
    r.delta = delta;
    r.fourth_bound = detail::fourth_bound_for(k, t, j, ledger);
    r.n_star = min_steps(r.fourth_bound, delta);
    r.nodes = std::min(std::max(r.n_star, base_nodes), node_cap);
    const auto est = d_deriv(k, t, j, r.nodes, ledger);
    r.value = est.value;
    r.margin = est.value - 2.0 * delta;
    r.budget_ok = within_budget(0.5 * est.err, delta);
    r.pass = r.budget_ok && exceeds_strict(est.value, 2.0 * delta);
    return r;
}

/// Lagrange remainder budget for the degree-n expansion of the r-th derivative
/// of d around t0: sup_xi ||G^xi log^m G||_inf * radius^{n+1} / (n+1)!, with
/// m = n + r + 1 and the sup taken from the exact v^s |log v|^m maximum.
/// Rejects degrees where the interior critical value overtakes the endpoint
/// value 9^xi log^m 9 (outside the window the closed estimate would be wrong).
inline double remainder_bound(int k, int r, double t0, double radius, int n) {
    (void)k;
    if (n < 0 || radius <= 0.0) throw std::invalid_argument("remainder_bound: bad parameters");
    const int m = n + r + 1;
    const double xi_lo = t0 - radius;
    const double xi_hi = t0 + radius;
    const double interior = std::pow(m / (std::numbers::e * xi_lo), m);
    const double endpoint = std::pow(9.0, xi_hi) * detail::ipow(std::log(9.0), m);
    if (interior > endpoint)
        throw std::domain_error("remainder_bound: degree outside the sup-estimate window");
    return endpoint * std::pow(radius, n + 1) / detail::factorial(n + 1);
}

/// Approximate Taylor polynomial of d^(r) around t0 with certified
/// per-coefficient and remainder budgets.
struct TaylorModel {
    int k = 0;
    int order = 0;       ///< r: which derivative of d is modeled
    double center = 0.0; ///< t0
    double radius = 0.0;
    int degree = 0;      ///< n
    std::vector<double> coeffs;         ///< dbar_j = quadrature estimate of d^(j+r)(t0)
    std::vector<double> budgets;        ///< delta_j
    std::vector<double> eta;            ///< per-integral quadrature targets
    std::vector<double> fourth_bounds;  ///< certified |H''''| bounds per coefficient
    std::vector<int> n_star;            ///< minimal node counts meeting eta_j
    int nodes = 0;                      ///< N used for every coefficient
    double remainder = 0.0;             ///< delta_{n+1}
    double delta_total = 0.0;           ///< delta, dominates sum of budgets + remainder
};

/// P^(i)(t) of the model polynomial P(t) = sum_j coeffs[j]/j! (t - t0)^j,
/// evaluated by Horner in the shifted variable.
inline double model_derivative_at(const TaylorModel& m, int i, double t) {
    const double s = t - m.center;
    double v = 0.0;
    for (int j = m.degree; j >= i; --j) v = v * s + m.coeffs[j] / detail::factorial(j - i);
    return v;
}

inline double model_value_at(const TaylorModel& m, double t) {
    return model_derivative_at(m, 0, t);
}

/// Builds the model: plans N_j from the fourth-derivative bound at (t0, j+r)
/// against eta_j = delta_j j! / (2 radius^j), fails if any N_j exceeds the
/// node cap, then computes every coefficient with the fixed node count.
inline TaylorModel build_taylor_model(int k, int r, double t0, double radius, int n,
                                      const std::vector<double>& budgets, double delta_total,
                                      const BoundLedger& ledger, int nodes = 500,
                                      int node_cap = 500) {
    if (static_cast<int>(budgets.size()) != n + 1)
        throw std::invalid_argument("build_taylor_model: need one budget per coefficient");
    TaylorModel m;
    m.k = k;
    m.order = r;
    m.center = t0;
    m.radius = radius;
    m.degree = n;
    m.budgets = budgets;
    m.delta_total = delta_total;
    m.nodes = nodes;
    m.remainder = remainder_bound(k, r, t0, radius, n);

    double spent = m.remainder;
    for (double d : budgets) {
        if (d <= 0.0) throw std::invalid_argument("build_taylor_model: budgets must be positive");
        spent += d;
    }
    if (!(spent < delta_total))
        throw std::runtime_error("build_taylor_model: budgets do not fit under delta");

    for (int j = 0; j <= n; ++j) {
        const double eta = budgets[j] * detail::factorial(j) / (2.0 * std::pow(radius, j));
        const double fb = detail::fourth_bound_for(k, t0, j + r, ledger);
        const int ns = min_steps(fb, eta);
        if (ns > node_cap)
            throw std::runtime_error("build_taylor_model: coefficient " + std::to_string(j) +
                                     " needs N = " + std::to_string(ns) + " > cap");
        const auto est = d_deriv(k, t0, j + r, nodes, ledger);
        if (!within_budget(0.5 * est.err, eta))
            throw std::runtime_error("build_taylor_model: quadrature budget missed");
        m.eta.push_back(eta);
        m.fourth_bounds.push_back(fb);
        m.n_star.push_back(ns);
        m.coeffs.push_back(est.value);
    }
    return m;
}

enum class TailKind { constant_negative, parabola_negative_definite };

/// Certificate that p = P_n + delta is negative on [a, b]: all derivatives of
/// p at a negative down to the tail, and the tail negative on the whole line
/// (a negative constant, or a concave parabola with negative discriminant).
struct SignChainCertificate {
    double left = 0.0;                    ///< a
    double p_at_left = 0.0;               ///< P_n(a) + delta
    std::vector<double> chain;            ///< p^(i)(a) for the checked prefix, i = 0..
    TailKind tail = TailKind::constant_negative;
    double tail_lead = 0.0;               ///< leading coefficient of the tail
    std::optional<double> discriminant;   ///< dbar_{n-1}^2 - 2 dbar_{n-2} dbar_n
    bool pass = false;
    int failed_index = -1;
    double failed_value = 0.0;
};

inline SignChainCertificate certify_negative(const TaylorModel& m, double a, double b) {
    if (a < m.center - m.radius - 1e-12 || b > m.center + m.radius + 1e-12 || a >= b)
        throw std::invalid_argument("certify_negative: interval outside the model range");
    const int n = m.degree;
    std::vector<double> derivs(n + 1);
    for (int i = 0; i <= n; ++i) derivs[i] = model_derivative_at(m, i, a);
    const double p_a = derivs[0] + m.delta_total;

    SignChainCertificate cert;
    cert.left = a;
    cert.p_at_left = p_a;

    auto chain_ok = [&](int upto) {
        if (p_a >= 0.0) {
            cert.failed_index = 0;
            cert.failed_value = p_a;
            return false;
        }
        for (int i = 1; i <= upto; ++i) {
            if (derivs[i] >= 0.0) {
                cert.failed_index = i;
                cert.failed_value = derivs[i];
                return false;
            }
        }
        return true;
    };

    // constant tail first: p^(n) = dbar_n everywhere
    if (m.coeffs[n] < 0.0 && chain_ok(n - 1)) {
        cert.tail = TailKind::constant_negative;
        cert.tail_lead = m.coeffs[n];
        cert.chain.assign(derivs.begin(), derivs.begin() + n);
        cert.chain[0] = p_a;
        cert.failed_index = -1;
        cert.pass = true;
        return cert;
    }
    // quadratic tail: p^(n-2)(t) = dbar_{n-2} + dbar_{n-1} s + dbar_n s^2 / 2
    if (n >= 2) {
        const double disc = m.coeffs[n - 1] * m.coeffs[n - 1] -
                            2.0 * m.coeffs[n - 2] * m.coeffs[n];
        cert.discriminant = disc;
        if (m.coeffs[n] < 0.0 && disc < 0.0 && chain_ok(n - 3)) {
            cert.tail = TailKind::parabola_negative_definite;
            cert.tail_lead = 0.5 * m.coeffs[n];
            cert.chain.assign(derivs.begin(), derivs.begin() + std::max(0, n - 2));
            if (!cert.chain.empty()) cert.chain[0] = p_a;
            cert.failed_index = -1;
            cert.pass = true;
            return cert;
        }
    }
    cert.pass = false;
    return cert;
}

}  // namespace majorant

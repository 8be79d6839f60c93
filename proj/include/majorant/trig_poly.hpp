#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace majorant {

inline constexpr double kPi = std::numbers::pi;

enum class Sign { plus, minus };

/// Selects one of the two signed trinomials 1 + e(x) +/- e((k+2)x).
/// The verified cases are k = 3 and k = 4; evaluation works for any k >= 1.
struct PolyFamily {
    int k = 3;
    Sign sign = Sign::plus;

    double sgn() const { return sign == Sign::plus ? 1.0 : -1.0; }
    friend bool operator==(const PolyFamily&, const PolyFamily&) = default;
};

inline PolyFamily plus_family(int k) { return {k, Sign::plus}; }
inline PolyFamily minus_family(int k) { return {k, Sign::minus}; }

/// Point of the half-period [0, 1/2] paired with u = cos(2 pi x).
struct EvalPoint {
    double x = 0.0;
    double u = 1.0;
};

inline EvalPoint make_eval_point(double x) { return {x, std::cos(2.0 * kPi * x)}; }

inline bool eval_point_consistent(const EvalPoint& p, double tol = 1e-12) {
    return std::abs(p.u - std::cos(2.0 * kPi * p.x)) <= tol;
}

/// Exponent pair of the integrand G^t log^j G.
struct PowerLog {
    double t = 3.0;
    int j = 0;
};

namespace detail {

inline double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace detail

/// Squared modulus of the trinomial,
///   G(x) = 3 + 2 { cos(2 pi x) +/- cos((2k+2) pi x) +/- cos((2k+4) pi x) }.
/// Always in [0, 9].
inline double sq_modulus(const PolyFamily& fam, double x) {
    const double s = fam.sgn();
    const double a = 2.0 * kPi * x;
    return 3.0 + 2.0 * (std::cos(a) + s * std::cos((fam.k + 1) * a) + s * std::cos((fam.k + 2) * a));
}

/// m-th x-derivative of sq_modulus via the closed even/odd formulas, m = 1..4.
inline double sq_modulus_deriv(const PolyFamily& fam, int m, double x) {
    if (m < 1 || m > 4) throw std::invalid_argument("sq_modulus_deriv: order must be 1..4");
    const double s = fam.sgn();
    const double a = 2.0 * kPi * x;
    const double f1 = fam.k + 1.0;
    const double f2 = fam.k + 2.0;
    switch (m) {
        case 1:
            return -4.0 * kPi *
                   (std::sin(a) + s * f1 * std::sin(f1 * a) + s * f2 * std::sin(f2 * a));
        case 2:
            return -8.0 * kPi * kPi *
                   (std::cos(a) + s * f1 * f1 * std::cos(f1 * a) + s * f2 * f2 * std::cos(f2 * a));
        case 3:
            return 16.0 * kPi * kPi * kPi *
                   (std::sin(a) + s * f1 * f1 * f1 * std::sin(f1 * a) +
                    s * f2 * f2 * f2 * std::sin(f2 * a));
        default:
            return 32.0 * kPi * kPi * kPi * kPi *
                   (std::cos(a) + s * f1 * f1 * f1 * f1 * std::cos(f1 * a) +
                    s * f2 * f2 * f2 * f2 * std::cos(f2 * a));
    }
}

/// Below this the squared modulus is treated as an exact zero of the composite
/// integrands (G >= 0 has only double zeros, so the continuous extension is 0).
inline constexpr double kZeroGuard = 1e-14;

/// G^t log^j G, extended by continuity (value 0) across zeros of G. Needs t > 0.
inline double integrand(const PolyFamily& fam, const PowerLog& spec, double x) {
    if (spec.t <= 0.0) throw std::invalid_argument("integrand: exponent must be positive");
    const double v = sq_modulus(fam, x);
    if (v < kZeroGuard) return 0.0;
    if (spec.j == 0) return std::pow(v, spec.t);
    const double L = std::log(std::max(v, 1e-300));
    return std::pow(v, spec.t) * detail::ipow(L, spec.j);
}

/// Second x-derivative of the integrand,
///   H'' = G'' G^{t-1} (t L^j + j L^{j-1})
///       + G'^2 G^{t-2} (t(t-1) L^j + j(2t-1) L^{j-1} + j(j-1) L^{j-2}),  L = log G.
/// Terms with vanishing integer prefactor are dropped, so no negative power of L
/// is ever formed. Continuous extension 0 at zeros of G; needs t >= 2.
inline double integrand_dd(const PolyFamily& fam, const PowerLog& spec, double x) {
    if (spec.t < 2.0) throw std::invalid_argument("integrand_dd: exponent must be >= 2");
    const double v = sq_modulus(fam, x);
    if (v < kZeroGuard) return 0.0;
    const double t = spec.t;
    const int j = spec.j;
    const double L = std::log(std::max(v, 1e-300));
    const double g1 = sq_modulus_deriv(fam, 1, x);
    const double g2 = sq_modulus_deriv(fam, 2, x);

    double a = t * detail::ipow(L, j);
    double b = t * (t - 1.0) * detail::ipow(L, j);
    if (j >= 1) {
        a += j * detail::ipow(L, j - 1);
        b += j * (2.0 * t - 1.0) * detail::ipow(L, j - 1);
    }
    if (j >= 2) b += double(j) * (j - 1.0) * detail::ipow(L, j - 2);

    return g2 * std::pow(v, t - 1.0) * a + g1 * g1 * std::pow(v, t - 2.0) * b;
}

}  // namespace majorant

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "chebyshev.hpp"
#include "trig_poly.hpp"

namespace majorant {

/// Sup-norm bounds of the squared modulus and its derivatives:
///   M_0 = 9,  M_m = 2^{m+1} pi^m (1 + (k+1)^m + (k+2)^m)  (m = 1..4).
inline std::array<double, 5> deriv_sup_bounds(int k) {
    if (k < 1) throw std::invalid_argument("deriv_sup_bounds: k must be >= 1");
    std::array<double, 5> m{};
    m[0] = 9.0;
    for (int i = 1; i <= 4; ++i) {
        m[i] = std::pow(2.0, i + 1) * std::pow(kPi, i) *
               (1.0 + std::pow(k + 1.0, i) + std::pow(k + 2.0, i));
    }
    return m;
}

/// Exact maximum of v^s |log v|^m over [0, v_max]:
/// one interior critical point at v0 = exp(-m/s) with value (m/(e s))^m,
/// decreasing on [v0, 1], increasing on [1, oo).
inline double alpha_star(double s, int m, double v_max) {
    if (s <= 0.0 || v_max <= 0.0) throw std::invalid_argument("alpha_star: needs s, v_max > 0");
    if (m == 0) return std::pow(v_max, s);
    const double v0 = std::exp(-double(m) / s);
    const double peak = std::pow(m / (std::numbers::e * s), m);
    const double at_end = std::pow(v_max, s) * detail::ipow(std::abs(std::log(v_max)), m);
    if (v_max <= v0) return at_end;
    if (v_max <= 1.0) return peak;
    return std::max(peak, at_end);
}

/// Maximum of v^a Lambda(v)^b over [0, c], Lambda = max(|log v|, 1).
/// Needs a > 0; piecewise: alpha on (0, 1/e], plain power on [1/e, min(c, e)],
/// and v^a (log v)^b on [e, c] when c > e.
inline double power_lambda_max(double a, int b, double c) {
    if (a <= 0.0 || c <= 0.0) throw std::invalid_argument("power_lambda_max: needs a, c > 0");
    const double inv_e = std::exp(-1.0);
    double best = 0.0;
    if (b == 0) {
        best = std::pow(std::min(c, inv_e), a);
    } else if (double(b) >= a) {
        best = std::pow(b / (std::numbers::e * a), b);  // interior peak, v0 <= 1/e
    } else {
        best = std::pow(std::min(c, inv_e), a);         // increasing up to 1/e
    }
    if (c > inv_e) best = std::max(best, std::pow(std::min(c, std::numbers::e), a));
    if (c > std::numbers::e)
        best = std::max(best, std::pow(c, a) * detail::ipow(std::log(c), b));
    return best;
}

/// Certified upper bound of sup G'^2 / G obtained from the rational form in
/// u = cos(2 pi x), plus the refined (non-inflated) maximum for reporting.
struct RatioBound {
    double certified = 0.0;
    double estimate = 0.0;    ///< refined grid maximum
    double arg_max = 0.0;     ///< u at the maximum
    double den_min = 0.0;     ///< certified lower bound of the denominator on [-1, 1]
    double den_arg_min = 0.0;
};

namespace detail {

struct RatioPolys {
    Poly num;  // 16 pi^2 (1 - u^2) inner(u)^2
    Poly den;
};

inline RatioPolys ratio_polys(const PolyFamily& fam) {
    const double s = fam.sgn();
    Poly inner, den;
    if (fam.k == 3 && fam.sign == Sign::plus) {
        // the common factor (2u+1)^2 is cancelled; the reduced denominator
        // 8u^3 - 4u^2 - 8u + 5 stays away from zero on [-1, 1]
        inner = {6.0, -28.0, -4.0, 40.0};
        den = {5.0, -8.0, -4.0, 8.0};
    } else {
        inner = {1.0};
        inner = poly_add(inner, poly_scale(chebyshev_u(fam.k), s * (fam.k + 1)));
        inner = poly_add(inner, poly_scale(chebyshev_u(fam.k + 1), s * (fam.k + 2)));
        den = {3.0, 2.0};
        den = poly_add(den, poly_scale(chebyshev_t(fam.k + 1), 2.0 * s));
        den = poly_add(den, poly_scale(chebyshev_t(fam.k + 2), 2.0 * s));
    }
    Poly num = poly_scale(poly_mul(Poly{1.0, 0.0, -1.0}, poly_mul(inner, inner)),
                          16.0 * kPi * kPi);
    return {std::move(num), std::move(den)};
}

}  // namespace detail

/// Scan [-1, 1] in `cells` cells; on each cell the numerator is enveloped from
/// above and the denominator from below with first- and second-derivative
/// slack, which certifies the maximum of the quotient.
inline RatioBound ratio_bound_details(const PolyFamily& fam, int cells = 1'000'000) {
    const auto [num, den] = detail::ratio_polys(fam);
    const Poly dnum = poly_deriv(num);
    const Poly dden = poly_deriv(den);
    const double num_dd = poly_dd_sup_unit(num);
    const double den_dd = poly_dd_sup_unit(den);
    const double h = 2.0 / cells;
    const double q = 0.5 * h;

    RatioBound out;
    out.certified = -std::numeric_limits<double>::infinity();
    out.estimate = -std::numeric_limits<double>::infinity();
    out.den_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cells; ++i) {
        const double c = -1.0 + (i + 0.5) * h;
        const double n = poly_eval(num, c);
        const double d = poly_eval(den, c);
        const double n_hi = n + std::abs(poly_eval(dnum, c)) * q + 0.5 * num_dd * q * q;
        const double d_lo = d - std::abs(poly_eval(dden, c)) * q - 0.5 * den_dd * q * q;
        if (d_lo <= 0.0)
            throw std::runtime_error("ratio_bound: denominator not bounded away from zero");
        if (d_lo < out.den_min) {
            out.den_min = d_lo;
            out.den_arg_min = c;
        }
        out.certified = std::max(out.certified, n_hi / d_lo);
        const double plain = n / d;
        if (plain > out.estimate) {
            out.estimate = plain;
            out.arg_max = c;
        }
    }

    // golden-section refinement of the observed maximum (report value only)
    auto f = [&](double u) { return poly_eval(num, u) / poly_eval(den, u); };
    double lo = std::max(-1.0, out.arg_max - h);
    double hi = std::min(1.0, out.arg_max + h);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = f(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = f(x1);
        }
    }
    out.estimate = std::max(f1, f2);
    out.arg_max = 0.5 * (lo + hi);
    return out;
}

inline double ratio_bound(const PolyFamily& fam) { return ratio_bound_details(fam).certified; }

/// Certified lower bound for min G over the torus.
struct GridMin {
    double certified = 0.0;  ///< grid minimum minus Lipschitz slack, clamped at 0
    double observed = 0.0;   ///< refined minimum of the scan
    double arg_min = 0.0;
};

inline GridMin g_min_details(const PolyFamily& fam, int cells = 200'000) {
    const double h = 0.5 / cells;
    GridMin out;
    double grid_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cells; ++i) {
        const double x = (i + 0.5) * h;
        const double v = sq_modulus(fam, x);
        if (v < grid_min) {
            grid_min = v;
            out.arg_min = x;
        }
    }
    // local refinement around the best cell (report value only)
    auto f = [&](double x) { return sq_modulus(fam, x); };
    double lo = std::max(0.0, out.arg_min - h);
    double hi = std::min(0.5, out.arg_min + h);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 > f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = f(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = f(x1);
        }
    }
    out.observed = std::min({grid_min, f1, f2});

    const double m1 = deriv_sup_bounds(fam.k)[1];
    out.certified = std::max(0.0, grid_min - m1 * (0.5 * h));
    return out;
}

inline double g_min(const PolyFamily& fam) { return g_min_details(fam).certified; }

/// Per-k table of certified constants feeding the fourth-derivative estimates.
struct BoundLedger {
    int k = 0;
    std::array<double, 5> M{};          ///< derivative sup bounds M_0..M_4
    std::optional<double> M_star;       ///< bound on sup G'^2/G (k = 3 path)
    double g_min_plus = 0.0;
    double g_min_minus = 0.0;
    double ell_max = std::numeric_limits<double>::infinity();  ///< bound on |log G|
};

/// Frozen ledger constants; both are validated against the certified scans.
inline constexpr double kRatioCapK3 = 3900.0;
inline constexpr double kEllCapK4 = 3.7;

inline BoundLedger make_ledger(int k) {
    BoundLedger lg;
    lg.k = k;
    lg.M = deriv_sup_bounds(k);
    lg.g_min_plus = g_min(plus_family(k));
    lg.g_min_minus = g_min(minus_family(k));
    if (k == 3) {
        const double rp = ratio_bound(plus_family(3));
        const double rm = ratio_bound(minus_family(3));
        if (!(rp <= kRatioCapK3 && rm <= kRatioCapK3))
            throw std::runtime_error("make_ledger: ratio bounds exceed the frozen constant");
        lg.M_star = kRatioCapK3;
    } else if (k == 4) {
        const double gm = std::min(lg.g_min_plus, lg.g_min_minus);
        if (gm <= 0.0) throw std::runtime_error("make_ledger: min G not bounded away from zero");
        const double derived = std::max(std::abs(std::log(gm)), std::log(9.0));
        if (!(derived <= kEllCapK4))
            throw std::runtime_error("make_ledger: |log G| exceeds the frozen constant");
        lg.ell_max = kEllCapK4;
    } else {
        const double gm = std::min(lg.g_min_plus, lg.g_min_minus);
        if (gm > 0.0) lg.ell_max = std::max(std::abs(std::log(gm)), std::log(9.0));
    }
    return lg;
}

namespace detail {

/// Falling factorial j (j-1) ... (j-r+1); zero when j < r.
inline double ffact(int j, int r) {
    if (j < r) return 0.0;
    double p = 1.0;
    for (int i = 0; i < r; ++i) p *= double(j - i);
    return p;
}

struct FourthDerivWeights {
    double c1, c2, c3, c4;
};

/// Bracket polynomials of the closed fourth x-derivative of G^t log^j G with
/// every |log G| power replaced by ell:
///   |H''''| <= v^{t-4} M1^4 c1 + 6 v^{t-3} M1^2 M2 c2
///            + v^{t-2} (3 M2^2 + 4 M1 M3) c4 + v^{t-1} M4 c3.
inline FourthDerivWeights fourth_deriv_weights(double t, int j, double ell) {
    auto lp = [&](int r) { return j >= r ? ipow(ell, j - r) : 0.0; };
    const double c1 = ffact(j, 4) * lp(4) + (4.0 * t - 6.0) * ffact(j, 3) * lp(3) +
                      (6.0 * t * t - 18.0 * t + 11.0) * ffact(j, 2) * lp(2) +
                      2.0 * j * (2.0 * t * t * t - 9.0 * t * t + 11.0 * t - 3.0) * lp(1) +
                      t * (t - 1.0) * (t - 2.0) * (t - 3.0) * lp(0);
    const double c2 = ffact(j, 3) * lp(3) + 3.0 * (t - 1.0) * ffact(j, 2) * lp(2) +
                      (3.0 * t * t - 6.0 * t + 2.0) * j * lp(1) +
                      t * (t - 1.0) * (t - 2.0) * lp(0);
    const double c3 = j * lp(1) + t * lp(0);
    const double c4 = ffact(j, 2) * lp(2) + (2.0 * t - 1.0) * j * lp(1) +
                      t * (t - 1.0) * lp(0);
    return {c1, c2, c3, c4};
}

inline double large_region_value(double t, const std::array<double, 5>& M,
                                 const FourthDerivWeights& w, double v) {
    const double m1_4 = M[1] * M[1] * M[1] * M[1];
    const double m12m2 = M[1] * M[1] * M[2];
    const double mix = 3.0 * M[2] * M[2] + 4.0 * M[1] * M[3];
    return std::pow(v, t - 4.0) * m1_4 * w.c1 + 6.0 * std::pow(v, t - 3.0) * m12m2 * w.c2 +
           std::pow(v, t - 2.0) * mix * w.c4 + std::pow(v, t - 1.0) * M[4] * w.c3;
}

/// Max of the large-region envelope over [v_lo, 9] with ell frozen.
/// The envelope is a nonnegative combination of powers v^e, e > -1, so it
/// falls once and rises: the maximum sits at an endpoint. A scan over the
/// interior (including the dip) is folded in as well.
inline double large_region_bound(double t, int j, double ell_cap,
                                 const std::array<double, 5>& M, double v_lo) {
    const auto w = fourth_deriv_weights(t, j, ell_cap);
    double best = std::max(large_region_value(t, M, w, v_lo),
                           large_region_value(t, M, w, 9.0));
    constexpr int kScan = 10'000;
    for (int i = 1; i < kScan; ++i) {
        const double v = v_lo + (9.0 - v_lo) * i / kScan;
        best = std::max(best, large_region_value(t, M, w, v));
    }
    return best;
}

/// Small-region envelope via the G'^2 <= M* G comparison (Lambda form):
///   |H''''| <= P(t, j) v^{t-2} Lambda^j + Q(t, j) v^{t-1} Lambda^j,
/// each term maximized exactly over [0, v_split].
inline double small_region_bound(double t, int j, const BoundLedger& lg, double v_split) {
    const double ms = *lg.M_star;
    const double m2 = lg.M[2], m3 = lg.M[3], m4 = lg.M[4];
    const double s1 = ffact(j, 4) + (4.0 * t - 6.0) * ffact(j, 3) +
                      (6.0 * t * t - 18.0 * t + 11.0) * ffact(j, 2) +
                      2.0 * j * (2.0 * t * t * t - 9.0 * t * t + 11.0 * t - 3.0) +
                      t * (t - 1.0) * (t - 2.0) * (t - 3.0);
    const double s2 = ffact(j, 3) + 3.0 * (t - 1.0) * ffact(j, 2) +
                      (3.0 * t * t - 6.0 * t + 2.0) * j + t * (t - 1.0) * (t - 2.0);
    const double s4 = ffact(j, 2) + (2.0 * t - 1.0) * j + t * (t - 1.0);
    const double p = ms * ms * s1 + 6.0 * ms * m2 * s2 +
                     (2.0 * std::sqrt(ms) * m3 + 3.0 * m2 * m2) * s4;
    const double q = 2.0 * std::sqrt(ms) * m3 * s4 + m4 * (j + t);
    return p * power_lambda_max(t - 2.0, j, v_split) +
           q * power_lambda_max(t - 1.0, j, v_split);
}

}  // namespace detail

struct HivBranches {
    double large = 0.0;
    double small = 0.0;
    double v_split = 0.0;
};

/// Certified sup over [0, 1/2] of the fourth x-derivative of G^t log^j G for
/// the k = 3 style analysis: the range of G is split at v_split (3 for the
/// t = 3, j = 1 case, e otherwise), the upper region is handled through the
/// derivative sup bounds with |log G| <= log 9, the lower region through the
/// M* comparison. Needs t >= 3 so no negative power of G survives.
inline HivBranches hiv_bound_branches(const PolyFamily& fam, double t, int j,
                                      const BoundLedger& ledger) {
    (void)fam;  // the estimate is uniform in the sign
    if (t < 3.0) throw std::domain_error("hiv_bound: needs t >= 3");
    if (j < 0) throw std::domain_error("hiv_bound: needs j >= 0");
    if (!ledger.M_star) throw std::domain_error("hiv_bound: ledger lacks the ratio bound");
    const double v_split = (j == 1 && t == 3.0) ? 3.0 : std::numbers::e;
    HivBranches b;
    b.v_split = v_split;
    b.large = detail::large_region_bound(t, j, std::log(9.0), ledger.M, v_split);
    b.small = detail::small_region_bound(t, j, ledger, v_split);
    return b;
}

inline double hiv_bound(const PolyFamily& fam, double t, int j, const BoundLedger& ledger) {
    const auto b = hiv_bound_branches(fam, t, j, ledger);
    return std::max(b.large, b.small);
}

/// Plain-substitution bound for k = 4: every |log G| power goes to ell_max and
/// every power of G to its extreme over [min G, 9]. Valid for t in [4, 5].
inline double hiv_bound_k4(double t, int j, const BoundLedger& ledger) {
    if (!(t >= 4.0 && t <= 5.0)) throw std::domain_error("hiv_bound_k4: needs t in [4, 5]");
    const double gm = std::min(ledger.g_min_plus, ledger.g_min_minus);
    if (gm <= 0.0) throw std::domain_error("hiv_bound_k4: needs a positive certified min of G");
    if (!std::isfinite(ledger.ell_max))
        throw std::domain_error("hiv_bound_k4: ledger lacks a finite |log G| bound");
    const auto w = detail::fourth_deriv_weights(t, j, ledger.ell_max);
    auto vmax = [&](double e) { return std::max(std::pow(9.0, e), std::pow(gm, e)); };
    const auto& M = ledger.M;
    const double m1_4 = M[1] * M[1] * M[1] * M[1];
    const double m12m2 = M[1] * M[1] * M[2];
    const double mix = 3.0 * M[2] * M[2] + 4.0 * M[1] * M[3];
    return vmax(t - 4.0) * m1_4 * w.c1 + 6.0 * vmax(t - 3.0) * m12m2 * w.c2 +
           vmax(t - 2.0) * mix * w.c4 + vmax(t - 1.0) * M[4] * w.c3;
}

}  // namespace majorant

#pragma once

#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "quadrature.hpp"
#include "trig_poly.hpp"

namespace majorant {

/// Exact Fourier coefficients of (1 + e_1 +/- e_{k+2})^rho, indexed by the
/// frequency nu = 0 .. rho (k+2). Valid for rho <= k+1 only; above that the
/// binomial formula picks up extra terms.
struct CoeffVector {
    int rho = 0;
    std::vector<long long> coeffs;
};

inline long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

/// a(nu) = (+/-1)^mu C(rho, mu) C(rho - mu, lambda),
/// mu = nu div (k+2), lambda = nu mod (k+2).
inline CoeffVector fourier_coeffs(const PolyFamily& fam, int rho) {
    if (rho < 1 || rho > fam.k + 1)
        throw std::domain_error("fourier_coeffs: rho must be in 1 .. k+1");
    const int period = fam.k + 2;
    CoeffVector out;
    out.rho = rho;
    out.coeffs.assign(static_cast<std::size_t>(rho) * period + 1, 0);
    for (int nu = 0; nu <= rho * period; ++nu) {
        const int mu = nu / period;
        const int lam = nu % period;
        long long a = binomial(rho, mu) * binomial(rho - mu, lam);
        if (fam.sign == Sign::minus && (mu & 1)) a = -a;
        out.coeffs[nu] = a;
    }
    return out;
}

/// Exact rational, denominator kept explicit.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return double(num) / double(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parseval identity: int_0^{1/2} G^rho = (1/2) sum_nu a(nu)^2, exact.
inline Rational power_integral(const PolyFamily& fam, int rho) {
    const auto cv = fourier_coeffs(fam, rho);
    long long s = 0;
    for (long long a : cv.coeffs) s += a * a;
    return {s, 2};
}

struct EndpointCase {
    int rho = 0;
    Rational exact_plus, exact_minus;
    bool equal = false;        ///< exact integer equality of the two integrals
    double quad_plus = 0.0, quad_minus = 0.0;
    double quad_err = 0.0;     ///< certified per-integral quadrature bound
    bool cross_ok = false;     ///< |quadrature - exact| within the certificate
};

struct EndpointCheck {
    int k = 0;
    std::vector<EndpointCase> cases;  ///< rho = k and rho = k+1
    bool pass = false;
};

/// The two endpoint identities d(k) = d(k+1) = 0, exact in integers, each
/// cross-checked against the certified quadrature of G^rho.
inline EndpointCheck endpoint_check(int k, const BoundLedger& ledger, int nodes = 100) {
    EndpointCheck out;
    out.k = k;
    out.pass = true;
    for (int rho = k; rho <= k + 1; ++rho) {
        EndpointCase c;
        c.rho = rho;
        c.exact_plus = power_integral(plus_family(k), rho);
        c.exact_minus = power_integral(minus_family(k), rho);
        c.equal = (c.exact_plus == c.exact_minus);

        const double fb = (k == 4) ? hiv_bound_k4(double(rho), 0, ledger)
                                   : hiv_bound(plus_family(k), double(rho), 0, ledger);
        c.cross_ok = true;
        for (Sign sgn : {Sign::plus, Sign::minus}) {
            const PolyFamily fam{k, sgn};
            const PowerLog spec{double(rho), 0};
            auto q = integrate([&](double x) { return integrand(fam, spec, x); },
                               [&](double x) { return integrand_dd(fam, spec, x); }, fb, nodes);
            const Rational exact = (sgn == Sign::plus) ? c.exact_plus : c.exact_minus;
            const bool ok = within_budget(std::abs(q.value - exact.to_double()), q.error_bound);
            c.cross_ok = c.cross_ok && ok;
            c.quad_err = q.error_bound;
            (sgn == Sign::plus ? c.quad_plus : c.quad_minus) = q.value;
        }
        out.pass = out.pass && c.equal && c.cross_ok;
        out.cases.push_back(c);
    }
    return out;
}

}  // namespace majorant

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace majorant {

/// Dense polynomial, coefficients in ascending order of the power.
using Poly = std::vector<double>;

inline double poly_eval(const Poly& p, double x) {
    double r = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_scale(const Poly& a, double c) {
    Poly r = a;
    for (double& v : r) v *= c;
    return r;
}

inline Poly poly_deriv(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * double(i);
    return r;
}

/// sum |c_i| i (i-1): a sup bound for |p''| on [-1, 1].
inline double poly_dd_sup_unit(const Poly& p) {
    double s = 0.0;
    for (std::size_t i = 2; i < p.size(); ++i) s += std::abs(p[i]) * double(i) * double(i - 1);
    return s;
}

/// Chebyshev polynomial of the first kind, T_m(u) = cos(m arccos u).
inline Poly chebyshev_t(int m) {
    Poly prev = {1.0};       // T_0
    if (m == 0) return prev;
    Poly cur = {0.0, 1.0};   // T_1
    for (int i = 1; i < m; ++i) {
        Poly next = poly_mul({0.0, 2.0}, cur);
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Chebyshev polynomial of the second kind, U_m(u) = sin((m+1) v) / sin v, u = cos v.
inline Poly chebyshev_u(int m) {
    Poly prev = {1.0};       // U_0
    if (m == 0) return prev;
    Poly cur = {0.0, 2.0};   // U_1
    for (int i = 1; i < m; ++i) {
        Poly next = poly_mul({0.0, 2.0}, cur);
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace majorant

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "majorant/bounds.hpp"
#include "majorant/parseval.hpp"
#include "majorant/trig_poly.hpp"

using namespace majorant;

namespace {

// central finite differences of sq_modulus, the independent oracle for the
// closed derivative formulas
double fd_deriv(const PolyFamily& fam, int m, double x, double h) {
    auto g = [&](double y) { return sq_modulus(fam, y); };
    switch (m) {
        case 1: return (g(x + h) - g(x - h)) / (2.0 * h);
        case 2: return (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h);
        case 3:
            return (0.5 * g(x + 2 * h) - g(x + h) + g(x - h) - 0.5 * g(x - 2 * h)) /
                   (h * h * h);
        default:
            return (g(x + 2 * h) - 4.0 * g(x + h) + 6.0 * g(x) - 4.0 * g(x - h) +
                    g(x - 2 * h)) /
                   (h * h * h * h);
    }
}

}  // namespace

TEST_CASE("squared modulus at the distinguished points") {
    REQUIRE(sq_modulus(plus_family(3), 0.0) == Catch::Approx(9.0).margin(1e-12));
    REQUIRE(sq_modulus(plus_family(3), 1.0 / 3.0) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(sq_modulus(minus_family(4), 0.0) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("squared modulus stays in [0, 9] and is symmetric about 1/2") {
    for (int k : {1, 3, 4, 7}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            const PolyFamily fam{k, s};
            int violations = 0;
            for (int i = 0; i <= 2000; ++i) {
                const double x = i / 2000.0;  // full period
                const double v = sq_modulus(fam, x);
                if (v < -1e-12 || v > 9.0 + 1e-12) ++violations;
                if (std::abs(sq_modulus(fam, 1.0 - x) - v) > 1e-11) ++violations;
            }
            REQUIRE(violations == 0);
        }
    }
}

TEST_CASE("closed second derivative at 0 matches the finite-difference oracle") {
    // frozen oracle values: -8 pi^2 (1 + 16 + 25) and -8 pi^2 (1 - 25 - 36)
    const double d2p = sq_modulus_deriv(plus_family(3), 2, 0.0);
    REQUIRE(d2p == Catch::Approx(-336.0 * kPi * kPi).epsilon(1e-12));
    REQUIRE(fd_deriv(plus_family(3), 2, 0.0, 1e-5) == Catch::Approx(d2p).epsilon(1e-4));

    const double d2m = sq_modulus_deriv(minus_family(4), 2, 0.0);
    REQUIRE(d2m == Catch::Approx(480.0 * kPi * kPi).epsilon(1e-12));
    REQUIRE(fd_deriv(minus_family(4), 2, 0.0, 1e-5) == Catch::Approx(d2m).epsilon(1e-4));

    REQUIRE(sq_modulus_deriv(plus_family(3), 1, 0.0) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("derivatives 1..4 track finite differences of the modulus") {
    for (int k : {3, 4}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            const PolyFamily fam{k, s};
            for (int i = 1; i <= 23; ++i) {
                const double x = 0.5 * i / 24.0;
                for (int m = 1; m <= 4; ++m) {
                    const double h = m <= 2 ? 1e-5 : 1e-3;
                    const double exact = sq_modulus_deriv(fam, m, x);
                    const double fd = fd_deriv(fam, m, x, h);
                    const double scale = std::max(std::abs(exact), deriv_sup_bounds(k)[m] * 1e-4);
                    INFO("k=" << k << " m=" << m << " x=" << x);
                    REQUIRE(std::abs(fd - exact) <= 2e-3 * scale + 1e-6);
                }
            }
        }
    }
}

TEST_CASE("derivative magnitudes stay under the sup bounds") {
    for (int k : {3, 4}) {
        const auto m = deriv_sup_bounds(k);
        for (Sign s : {Sign::plus, Sign::minus}) {
            const PolyFamily fam{k, s};
            int violations = 0;
            for (int i = 0; i <= 100000; ++i) {
                const double x = 0.5 * i / 100000.0;
                for (int ord = 1; ord <= 4; ++ord) {
                    if (std::abs(sq_modulus_deriv(fam, ord, x)) > m[ord] * (1 + 1e-12))
                        ++violations;
                }
            }
            REQUIRE(violations == 0);
        }
    }
}

TEST_CASE("derivative order outside 1..4 is rejected") {
    REQUIRE_THROWS_AS(sq_modulus_deriv(plus_family(3), 5, 0.1), std::invalid_argument);
    REQUIRE_THROWS_AS(sq_modulus_deriv(plus_family(3), 0, 0.1), std::invalid_argument);
}

TEST_CASE("integrand values at the distinguished points") {
    REQUIRE(integrand(plus_family(3), {3.0, 1}, 1.0 / 3.0) == 0.0);
    REQUIRE(integrand(plus_family(3), {3.0, 0}, 0.0) == Catch::Approx(729.0).epsilon(1e-12));
}

TEST_CASE("integrand agrees with the direct composition away from zeros") {
    const PolyFamily fam = minus_family(3);
    const PowerLog spec{3.5, 2};
    const double x = 0.1;
    const double v = sq_modulus(fam, x);
    const double direct = std::pow(v, 3.5) * std::pow(std::log(v), 2.0);
    REQUIRE(integrand(fam, spec, x) == Catch::Approx(direct).epsilon(1e-12));
}

TEST_CASE("integrand second derivative matches finite differences of the integrand") {
    auto check = [](const PolyFamily& fam, const PowerLog& spec, double x) {
        auto h2 = [&](double y) { return integrand(fam, spec, y); };
        const double h = 1e-4;
        const double fd = (h2(x + h) - 2.0 * h2(x) + h2(x - h)) / (h * h);
        const double exact = integrand_dd(fam, spec, x);
        INFO("t=" << spec.t << " j=" << spec.j << " x=" << x);
        REQUIRE(fd == Catch::Approx(exact).epsilon(1e-3));
    };
    check(plus_family(3), {3.0, 1}, 0.1);
    check(minus_family(4), {4.0, 2}, 0.25);
    check(plus_family(3), {3.5, 4}, 0.21);
    check(minus_family(3), {3.0, 0}, 0.37);
}

TEST_CASE("integrand vanishes at the double zero, second derivative included") {
    const PolyFamily fam = plus_family(3);
    REQUIRE(integrand_dd(fam, {3.0, 1}, 1.0 / 3.0) == 0.0);
    // shrinking neighborhood of the zero: both composites tend to 0
    double prev_h = 1e100, prev_hdd = 1e100;
    for (int r = 3; r <= 12; ++r) {
        const double x = 1.0 / 3.0 + std::pow(10.0, -r);
        const double vh = std::abs(integrand(fam, {3.0, 1}, x));
        const double vhdd = std::abs(integrand_dd(fam, {3.0, 1}, x));
        REQUIRE(vh <= std::max(prev_h, 1e-8));
        REQUIRE(vhdd <= std::max(prev_hdd, 1e-3));
        prev_h = vh;
        prev_hdd = vhdd;
    }
    REQUIRE(std::abs(integrand(fam, {3.0, 1}, 1.0 / 3.0 + 1e-12)) < 1e-20);
}

TEST_CASE("grid averages recover the exact power integrals") {
    // mean over the half-period equals the constant Fourier coefficient 3
    for (Sign s : {Sign::plus, Sign::minus}) {
        const PolyFamily fam{3, s};
        const int n = 64;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += sq_modulus(fam, (i + 0.5) * 0.5 / n);
        REQUIRE(acc / n == Catch::Approx(3.0).margin(1e-10));
    }
    // grid averages of G^rho approach the exact Parseval values
    for (int k : {3, 4}) {
        for (int rho = 1; rho <= k + 1; ++rho) {
            for (Sign s : {Sign::plus, Sign::minus}) {
                const PolyFamily fam{k, s};
                const int n = 4096;
                double acc = 0.0;
                for (int i = 0; i < n; ++i)
                    acc += integrand(fam, {double(rho), 0}, (i + 0.5) * 0.5 / n);
                const double mean = acc / n;  // equals 2 * integral
                const double exact = 2.0 * power_integral(fam, rho).to_double();
                REQUIRE(mean == Catch::Approx(exact).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("eval point carries a consistent u coordinate") {
    for (double x : {0.0, 0.1, 0.25, 1.0 / 3.0, 0.5}) {
        const auto p = make_eval_point(x);
        REQUIRE(eval_point_consistent(p));
        REQUIRE(p.u >= -1.0);
        REQUIRE(p.u <= 1.0);
    }
}

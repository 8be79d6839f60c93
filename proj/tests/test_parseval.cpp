#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "majorant/parseval.hpp"

using namespace majorant;

namespace {

// brute-force oracle: coefficients of (1 + z +/- z^{k+2})^rho by repeated
// polynomial multiplication in exact integers
std::vector<long long> conv_oracle(const PolyFamily& fam, int rho) {
    std::vector<long long> base(fam.k + 3, 0);
    base[0] = 1;
    base[1] = 1;
    base[fam.k + 2] = fam.sign == Sign::plus ? 1 : -1;
    std::vector<long long> acc = {1};
    for (int i = 0; i < rho; ++i) {
        std::vector<long long> next(acc.size() + base.size() - 1, 0);
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; b < base.size(); ++b) next[a + b] += acc[a] * base[b];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

TEST_CASE("first power is the trinomial itself") {
    const auto cv = fourier_coeffs(plus_family(3), 1);
    REQUIRE(cv.coeffs == std::vector<long long>{1, 1, 0, 0, 0, 1});
}

TEST_CASE("second power matches the multiplication oracle, both signs") {
    const auto plus = fourier_coeffs(plus_family(3), 2);
    REQUIRE(plus.coeffs == std::vector<long long>{1, 2, 1, 0, 0, 2, 2, 0, 0, 0, 1});
    const auto minus = fourier_coeffs(minus_family(3), 2);
    REQUIRE(minus.coeffs == std::vector<long long>{1, 2, 1, 0, 0, -2, -2, 0, 0, 0, 1});
}

TEST_CASE("binomial formula equals rho-fold convolution for all valid rho") {
    for (int k : {3, 4, 5}) {
        for (Sign s : {Sign::plus, Sign::minus}) {
            const PolyFamily fam{k, s};
            for (int rho = 1; rho <= k + 1; ++rho) {
                INFO("k=" << k << " rho=" << rho);
                REQUIRE(fourier_coeffs(fam, rho).coeffs == conv_oracle(fam, rho));
            }
        }
    }
}

TEST_CASE("coefficient magnitudes ignore the sign") {
    for (int rho = 1; rho <= 4; ++rho) {
        const auto p = fourier_coeffs(plus_family(3), rho);
        const auto m = fourier_coeffs(minus_family(3), rho);
        REQUIRE(p.coeffs.size() == m.coeffs.size());
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            REQUIRE(std::abs(p.coeffs[i]) == std::abs(m.coeffs[i]));
    }
}

TEST_CASE("plus coefficients are nonnegative") {
    for (int rho = 1; rho <= 5; ++rho)
        for (long long a : fourier_coeffs(plus_family(4), rho).coeffs) REQUIRE(a >= 0);
}

TEST_CASE("power integrals at the small cases") {
    REQUIRE(power_integral(plus_family(3), 1) == Rational{3, 2});
    REQUIRE(power_integral(minus_family(3), 1) == Rational{3, 2});
    REQUIRE(power_integral(plus_family(3), 2) == Rational{15, 2});
    REQUIRE(power_integral(minus_family(3), 2) == Rational{15, 2});
}

TEST_CASE("power integrals are sign-independent up to rho = k+1") {
    for (int k : {3, 4}) {
        for (int rho = 1; rho <= k + 1; ++rho) {
            INFO("k=" << k << " rho=" << rho);
            REQUIRE(power_integral(plus_family(k), rho) == power_integral(minus_family(k), rho));
        }
    }
}

TEST_CASE("rho outside 1..k+1 is rejected") {
    REQUIRE_THROWS_AS(fourier_coeffs(plus_family(3), 5), std::domain_error);
    REQUIRE_THROWS_AS(fourier_coeffs(plus_family(3), 0), std::domain_error);
    REQUIRE_THROWS_AS(power_integral(plus_family(4), 6), std::domain_error);
}

TEST_CASE("endpoint check: exact identities plus quadrature cross-check") {
    for (int k : {3, 4}) {
        const auto ledger = make_ledger(k);
        const auto ec = endpoint_check(k, ledger, 100);
        REQUIRE(ec.pass);
        REQUIRE(ec.cases.size() == 2);
        for (const auto& c : ec.cases) {
            INFO("k=" << k << " rho=" << c.rho);
            REQUIRE(c.equal);
            REQUIRE(c.cross_ok);
            // d(rho) vanishes exactly
            REQUIRE(c.exact_plus.num == c.exact_minus.num);
            REQUIRE(c.exact_plus.den == c.exact_minus.den);
            // the quadrature really is close, not merely inside a loose certificate
            REQUIRE(std::abs(c.quad_plus - c.exact_plus.to_double()) <= c.quad_err);
            REQUIRE(std::abs(c.quad_minus - c.exact_minus.to_double()) <= c.quad_err);
        }
    }
}

#pragma once

#include <array>
#include <stdexcept>
#include <vector>

namespace majorant {

/// One Taylor-model block: center, radius, degree and the error budgets.
struct ModelConfig {
    double center = 0.0;
    double radius = 0.0;
    int degree = 0;
    std::vector<double> coeff_deltas;  ///< delta_j, j = 0..degree
    double delta_total = 0.0;          ///< delta dominating budgets + remainder
};

struct ProofConfig {
    int k = 3;
    std::vector<double> positivity_deltas;  ///< per-integral budgets for d', d'', ...
    std::vector<ModelConfig> models;
    int positivity_nodes = 100;  ///< base N for the low-order derivative checks
    int table_nodes = 500;       ///< N used for every Taylor coefficient
    int max_nodes = 500;         ///< reliability cap on planned node counts
    std::vector<double> spot_ts; ///< extra d(t) > 0 spot checks (not part of the chain)
    int spot_nodes = 2000;
};

inline ProofConfig default_config(int k) {
    ProofConfig c;
    c.k = k;
    if (k == 3) {
        c.positivity_deltas = {0.007, 0.04};
        c.models = {{3.5, 0.5, 10, std::vector<double>(11, 0.005), 0.068}};
        c.positivity_nodes = 100;
        c.spot_ts = {3.1, 3.5, 3.9};
    } else if (k == 4) {
        c.positivity_deltas = {0.003, 0.027, 0.112};
        c.models = {{4.25, 0.25, 7, {0.65, 0.73, 0.4, 0.15, 0.04, 0.01, 0.01, 0.01}, 2.21},
                    {4.75, 0.25, 6, {8.0, 9.0, 7.0, 3.0, 1.0, 1.0, 1.0}, 39.9}};
        c.positivity_nodes = 500;
        c.spot_ts = {4.1, 4.5, 4.9};
    } else {
        throw std::invalid_argument("default_config: only k = 3 and k = 4 are supported");
    }
    return c;
}

/// Reference values of the published analysis, shown side by side with the
/// computed quantities in reports and pinned by the acceptance suite.
namespace reference {

inline constexpr double d1_at_3 = 0.014012641;
inline constexpr double d2_at_3 = 0.08760174;
inline constexpr double d1_at_4 = 0.0062067;
inline constexpr double d2_at_4 = 0.05413417;
inline constexpr double d3_at_4 = 0.22557089;

inline constexpr std::array<double, 11> table1_coeffs = {
    -8.097236891, -37.59530251, -141.3912224, -468.2134571, -1423.831595, -4074.963995,
    -11148.7318,  -29465.89339, -75792.43387, -190751.6522, -471634.7482};
inline constexpr std::array<double, 11> table1_fourth = {
    3.3e12, 9.1e12, 2.5e13, 6.8e13, 1.9e14, 4.8e14, 2.8e15, 2.6e16, 2.7e17, 2.9e18, 3.4e19};
inline constexpr std::array<int, 11> table1_nstar = {383, 415, 378, 310, 239,
                                                     169, 142, 128, 115, 101, 88};

inline constexpr std::array<double, 8> table2_coeffs = {
    -11.99030682, -64.72801527, -273.5687453, -1000.494741,
    -3319.462864, -10266.25853, -30113.02268, -84761.00164};
inline constexpr std::array<double, 8> table2_fourth = {1.23e15, 5.32e15, 2.29e16, 9.80e16,
                                                        4.18e17, 1.77e18, 7.47e18, 3.14e19};
inline constexpr std::array<int, 8> table2_nstar = {499, 494, 492, 486, 486, 466, 302, 188};

inline constexpr std::array<double, 7> table3_coeffs = {
    -111.5230149, -432.5730847, -1509.259877, -4867.920658,
    -14785.12009, -42842.09045, -119563.5221};
inline constexpr std::array<double, 7> table3_fourth = {4.98e15, 2.13e16, 9.07e16, 3.85e17,
                                                        1.63e18, 6.83e18, 2.86e19};
inline constexpr std::array<int, 7> table3_nstar = {378, 373, 339, 323, 305, 207, 134};

/// P_10(3) and the derivative chain p^(1..7)(3) of the k = 3 sign chain.
inline constexpr std::array<double, 8> chain_k3 = {
    -0.068458667, -4.00969183, -23.12291565, -93.80789264,
    -324.0046433, -978.7532737, -3144.062078, -5587.909055};
inline constexpr double discriminant_k3 = -3.511e10;

/// P_7(4) and p^(1..6)(4) of the first k = 4 model.
inline constexpr std::array<double, 7> chain_k4_a = {
    -2.2178666857, -20.41147631, -104.6546745, -426.8260106,
    -1473.198415,  -5386.784165, -8922.772271};

/// P_6(4.5) and p^(1..5)(4.5) of the second k = 4 model.
inline constexpr std::array<double, 6> chain_k4_b = {
    -39.9655627058, -174.8777051, -662.2069802, -2199.092624, -7810.957541, -12951.20993};

inline constexpr double ratio_plus_k3 = 3699.0;   ///< observed maximum of G'^2/G, plus sign
inline constexpr double ratio_minus_k3 = 3865.0;  ///< observed maximum, minus sign
inline constexpr double ratio_cap_plus = 3700.0;
inline constexpr double ratio_cap_minus = 3900.0;

inline constexpr double g_min_plus_k4 = 0.0946;
inline constexpr double g_min_minus_k4 = 0.02776;

}  // namespace reference

}  // namespace majorant

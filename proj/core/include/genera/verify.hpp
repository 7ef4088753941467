#pragma once

#include <complex>
#include <vector>

#include "genera/report.hpp"

namespace genera {

/// Knobs shared by the verification suites and the CLI.  Defaults are the
/// documented desk-scale values; `verify --suite all` stays deterministic
/// for any thread count (suites fan out, aggregation is ordered).
struct VerifyConfig {
    int q_order = 60;
    int z_order = 10;           // degree cap in the (2 pi i z)^2 grading
    int lattice_cutoff = 300;   // tier-B box cutoff
    int tier_a_cutoff = 400;
    std::vector<double> s_grid{1.0, 0.5, 0.25, 0.1};
    double tol_tight = 1e-6;
    int traces_k_max = 10;
    int ramanujan_k_max = 6;
    int witten_k_max = 5;
    int witten_q_order = 30;
    // Tier-A grid and the tier-B evaluation point.
    std::vector<std::complex<double>> tau_grid{{0.0, 1.0}, {0.0, 2.0}, {0.5, 1.0}};
    std::vector<double> z_grid{0.05, 0.1, 0.2};
    std::complex<double> tier_b_z{0.1, 0.0};
    std::complex<double> tier_b_tau{0.0, 2.0};
};

/// Both computation routes for the A-roof and L genus coefficients, k up to
/// traces_k_max, plus the golden k <= 4 (A-roof) / k <= 3 (L) table values.
std::vector<Report> run_traces_suite(const VerifyConfig& cfg);

/// U_{2k} identities and sign laws, k up to ramanujan_k_max, through
/// q^q_order; golden U_0, U_2, U_4, U_6 polynomials.
std::vector<Report> run_ramanujan_suite(const VerifyConfig& cfg);

/// Formal Witten identity exp(log Q_W) * sigma/z = 1 through the z_order /
/// witten_q_order box, plus the per-coefficient double route.
std::vector<Report> run_witten_suite(const VerifyConfig& cfg);

/// Numeric tier A on the (z, tau) grid and tier B along the s-grid.
std::vector<Report> run_theta_suite(const VerifyConfig& cfg);

std::vector<Report> run_all_suites(const VerifyConfig& cfg);

/// True when every tier-A report passed (tier-B failures are warnings at
/// the CLI level).
bool all_tier_a_pass(const std::vector<Report>& reports);

}  // namespace genera

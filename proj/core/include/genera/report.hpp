#pragma once

#include <complex>
#include <string>
#include <vector>

namespace genera {

/// One convergence-table row (CSV: s, M, lhs_re, lhs_im, rhs_re, rhs_im,
/// abs_residual).
struct ConvergenceRow {
    double s = 0.0;
    int cutoff = 0;
    std::complex<double> lhs{0.0, 0.0};
    std::complex<double> rhs{0.0, 0.0};
    double residual = 0.0;
};

/// Outcome of one verification claim.  "diff" carries human-readable
/// mismatch descriptions (empty when the claim passed); "table" carries
/// numeric convergence data when the check produced any.
struct Report {
    std::string claim;
    long k = 0;
    long order = 0;
    bool pass = false;
    bool tier_a = true;  // tier-A failures are hard; tier-B failures are warnings
    std::vector<std::string> diff;
    std::vector<ConvergenceRow> table;
};

/// { "claim": ..., "k": ..., "order": ..., "status": "pass"|"fail", "diff": [...] }
std::string report_to_json(const Report& r);
std::string reports_to_json(const std::vector<Report>& rs);

std::string report_to_text(const Report& r);

/// CSV with header: s,M,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual
std::string convergence_csv(const std::vector<Report>& rs);

}  // namespace genera

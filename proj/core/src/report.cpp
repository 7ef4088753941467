#include "genera/report.hpp"

#include <json.hpp>

#include <sstream>

namespace genera {

namespace {

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["claim"] = r.claim;
    j["k"] = r.k;
    j["order"] = r.order;
    j["status"] = r.pass ? "pass" : "fail";
    j["diff"] = r.diff;
    if (!r.table.empty()) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : r.table) {
            rows.push_back({{"s", row.s},
                            {"M", row.cutoff},
                            {"lhs_re", row.lhs.real()},
                            {"lhs_im", row.lhs.imag()},
                            {"rhs_re", row.rhs.real()},
                            {"rhs_im", row.rhs.imag()},
                            {"abs_residual", row.residual}});
        }
        j["table"] = rows;
    }
    return j;
}

}  // namespace

std::string report_to_json(const Report& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::vector<Report>& rs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << (r.pass ? "pass" : (r.tier_a ? "FAIL" : "warn")) << "  " << r.claim;
    if (r.k > 0) os << "  [k=" << r.k << "]";
    if (r.order > 0) os << "  [order=" << r.order << "]";
    for (const auto& d : r.diff) os << "\n      " << d;
    return os.str();
}

std::string convergence_csv(const std::vector<Report>& rs) {
    std::ostringstream os;
    os.precision(17);
    os << "s,M,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual\n";
    for (const auto& r : rs)
        for (const auto& row : r.table)
            os << row.s << "," << row.cutoff << "," << row.lhs.real() << "," << row.lhs.imag()
               << "," << row.rhs.real() << "," << row.rhs.imag() << "," << row.residual << "\n";
    return os.str();
}

}  // namespace genera

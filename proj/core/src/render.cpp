#include "genera/render.hpp"

#include <json.hpp>

#include <map>

namespace genera {

namespace {

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string subscript(unsigned idx, bool latex) {
    if (!latex) return std::to_string(idx);
    if (idx < 10) return "_" + std::to_string(idx);
    return "_{" + std::to_string(idx) + "}";
}

std::string superscript(unsigned e, bool latex) {
    if (e <= 1) return "";
    if (latex && e >= 10) return "^{" + std::to_string(e) + "}";
    return "^" + std::to_string(e);
}

std::string monomial_text(const Partition& lam, const char* symbol, bool doubled_index,
                          bool latex) {
    std::string s;
    lam.for_each_part([&](unsigned j, unsigned m) {
        s += symbol;
        s += subscript(doubled_index ? 2 * j : j, latex);
        s += superscript(m, latex);
    });
    return s;
}

std::string rational_latex(const Rational& c) {
    if (c.is_integer()) return c.str();
    const std::string sign = c.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + c.abs().numerator().get_str() + "}{" + c.denominator().get_str() +
           "}";
}

// Shared rendering over a partition-keyed term map: terms come out in map
// (reverse-lexicographic) order with the common denominator pulled out.
std::string poly_text(const std::map<Partition, Rational>& terms, const char* symbol,
                      bool doubled_index) {
    if (terms.empty()) return "0";
    if (terms.size() == 1) {
        const auto& [lam, c] = *terms.begin();
        const std::string mono = monomial_text(lam, symbol, doubled_index, false);
        if (mono.empty()) return c.str();
        if (c.is_one()) return mono;
        if (c == Rational(-1)) return "-" + mono;
        return c.str() + " " + mono;
    }
    Int d = 1;
    for (const auto& [lam, c] : terms) d = lcm(d, c.denominator());
    std::string sum;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        const Int n = c.numerator() * (d / c.denominator());
        const Int a = ::abs(n);
        if (first) {
            if (sgn(n) < 0) sum += "-";
            first = false;
        } else {
            sum += sgn(n) < 0 ? " - " : " + ";
        }
        const std::string mono = monomial_text(lam, symbol, doubled_index, false);
        if (a != 1 || mono.empty()) sum += a.get_str();
        sum += mono;
    }
    if (d == 1) return sum;
    return "(" + sum + ")/" + d.get_str();
}

std::string poly_latex(const std::map<Partition, Rational>& terms, const char* symbol,
                       bool doubled_index) {
    if (terms.empty()) return "0";
    if (terms.size() == 1) {
        const auto& [lam, c] = *terms.begin();
        const std::string mono = monomial_text(lam, symbol, doubled_index, true);
        if (mono.empty()) return rational_latex(c);
        if (c.is_one()) return mono;
        if (c == Rational(-1)) return "-" + mono;
        return rational_latex(c) + mono;
    }
    Int d = 1;
    for (const auto& [lam, c] : terms) d = lcm(d, c.denominator());
    std::string sum;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        const Int n = c.numerator() * (d / c.denominator());
        const Int a = ::abs(n);
        if (first) {
            if (sgn(n) < 0) sum += "-";
            first = false;
        } else {
            sum += sgn(n) < 0 ? "-" : "+";
        }
        const std::string mono = monomial_text(lam, symbol, doubled_index, true);
        if (a != 1 || mono.empty()) sum += a.get_str();
        sum += mono;
    }
    if (d == 1) return sum;
    return "\\frac{1}{" + d.get_str() + "}(" + sum + ")";
}

nlohmann::ordered_json terms_json(const std::map<Partition, Rational>& terms, unsigned weight) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [lam, c] : terms) {
        auto mults = nlohmann::ordered_json::array();
        for (unsigned j = 1; j <= weight; ++j) mults.push_back(lam.multiplicity(j));
        arr.push_back({mults, c.str_slashed()});
    }
    return arr;
}

const char* basis_symbol(SymBasis b) { return b == SymBasis::PowerSum ? "s" : "p"; }
const char* basis_symbol(EisensteinBasis b) { return b == EisensteinBasis::G ? "G" : "E"; }

}  // namespace

std::string to_text(const SymPoly& f) { return poly_text(f.terms(), basis_symbol(f.basis()), false); }

std::string to_text(const QuasiPoly& f) {
    return poly_text(f.terms(), basis_symbol(f.basis()), true);
}

std::string to_text(const QSeries& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [n, c] : f.coefficients()) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::string power;
        if (n == 1) power = "q";
        else if (n > 1) power = "q^" + std::to_string(n);
        if (power.empty()) {
            s += a.str();
        } else if (a.is_one()) {
            s += power;
        } else if (a.is_integer()) {
            s += a.str() + power;
        } else {
            s += a.str() + " " + power;
        }
    }
    return s;
}

std::string to_latex(const SymPoly& f) {
    return poly_latex(f.terms(), basis_symbol(f.basis()), false);
}

std::string to_latex(const QuasiPoly& f) {
    return poly_latex(f.terms(), basis_symbol(f.basis()), true);
}

std::string to_latex(const QSeries& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [n, c] : f.coefficients()) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? "-" : "+";
        }
        std::string power;
        if (n == 1) power = "q";
        else if (n > 1) power = (n < 10) ? "q^" + std::to_string(n) : "q^{" + std::to_string(n) + "}";
        if (power.empty()) s += rational_latex(a);
        else if (a.is_one()) s += power;
        else s += rational_latex(a) + power;
    }
    return s;
}

std::string to_json(const QSeries& f) {
    nlohmann::ordered_json j;
    j["truncation"] = f.truncation();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [n, c] : f.coefficients()) arr.push_back({n, c.str_slashed()});
    j["coeffs"] = arr;
    return j.dump();
}

std::string to_json(const SymPoly& f) {
    nlohmann::ordered_json j;
    j["weight"] = f.weight();
    j["basis"] = basis_symbol(f.basis());
    j["terms"] = terms_json(f.terms(), f.weight());
    return j.dump();
}

std::string to_json(const QuasiPoly& f) {
    nlohmann::ordered_json j;
    j["weight"] = f.weight();
    j["basis"] = basis_symbol(f.basis());
    j["terms"] = terms_json(f.terms(), f.k());
    return j.dump();
}

}  // namespace genera

#pragma once

#include <map>
#include <utility>

#include "genera/qseries.hpp"
#include "genera/rational.hpp"

namespace genera {

/// Bivariate series in v and q, Laurent in v, where v stands for u^{1/2}
/// (so v^2 = u).  Fractional prefactors like u^{1/2} q^{1/8} are never
/// stored; identities involving them are verified in cleared form.  Trusted
/// through q^q_truncation; the v-support is finite at each q-exponent.
class ThetaSeries {
public:
    explicit ThetaSeries(int q_truncation);

    int q_truncation() const { return qtrunc_; }

    /// Keys are (q_exponent, v_exponent); no zero coefficients stored.
    const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeff_; }

    Rational coeff(int v_exp, int q_exp) const;
    void add_term(int v_exp, int q_exp, const Rational& c);

    bool is_zero() const { return coeff_.empty(); }

    ThetaSeries operator-() const;
    ThetaSeries operator+(const ThetaSeries& o) const;
    ThetaSeries operator-(const ThetaSeries& o) const;
    ThetaSeries operator*(const ThetaSeries& o) const;
    ThetaSeries operator*(const QSeries& o) const;  // v-degree-0 multiplier
    ThetaSeries scaled(const Rational& c) const;

    /// Coefficient map of the substitution v -> -1/v (u -> 1/u with the
    /// half-power sign); used by the oddness checks.
    ThetaSeries substitute_v_to_minus_inverse() const;

    friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) {
        return a.qtrunc_ == b.qtrunc_ && a.coeff_ == b.coeff_;
    }

private:
    int qtrunc_ = 0;
    std::map<std::pair<int, int>, Rational> coeff_;
};

/// The u-dependent factor of the modified theta product, cleared of
/// u^{1/2} q^{1/8}:
///
///   (v - v^{-1}) prod_{n=1}^{N} (1 - v^2 q^n)(1 - v^{-2} q^n) / (1 - q^n)^2
///
/// exact through q^N.  Multiplying by prod (1-q^n)^3 recovers the triple
/// product sum  sum_{n in Z} (-1)^n v^{2n+1} q^{n(n+1)/2}.
ThetaSeries theta_product(int q_truncation);

}  // namespace genera

#pragma once

#include <map>
#include <string>

#include "genera/rational.hpp"

namespace genera {

/// Truncated power series in q with Rational coefficients.  Coefficients of
/// q^n for n <= truncation() are trusted; nothing beyond is stored.  Every
/// binary operation truncates to the smaller trusted order.  Storage is a
/// sparse map (Eisenstein and theta-type series are short at desk scale).
class QSeries {
public:
    /// Zero series trusted through q^truncation.
    explicit QSeries(int truncation);

    static QSeries constant(const Rational& c, int truncation);
    static QSeries one(int truncation) { return constant(1, truncation); }
    static QSeries monomial(const Rational& c, int exponent, int truncation);

    int truncation() const { return trunc_; }
    const std::map<int, Rational>& coefficients() const { return coeff_; }

    /// Coefficient of q^n; zero when unset.  Throws std::out_of_range for
    /// n beyond the trusted order (that read would be a bug, not a zero).
    Rational coeff(int n) const;

    /// Sets the coefficient of q^n (n <= truncation; zero erases).
    void set_coeff(int n, const Rational& c);

    bool is_zero() const { return coeff_.empty(); }

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rational& c) const;

    /// Re-truncates to a lower trusted order.
    QSeries truncated(int n) const;

    /// d/dq; the result is trusted one order less.
    QSeries derivative() const;

    /// Multiplicative inverse; requires a nonzero constant term.
    QSeries inverse() const;

    QSeries pow(unsigned e) const;

    /// Equal truncation and identical coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.trunc_ == b.trunc_ && a.coeff_ == b.coeff_;
    }

private:
    int trunc_ = 0;
    std::map<int, Rational> coeff_;
};

/// exp(f) for f with zero constant term (throws std::domain_error otherwise).
QSeries exp_series(const QSeries& f);

/// log(g) for g with constant term 1 (throws std::domain_error otherwise).
QSeries log_series(const QSeries& g);

/// Coefficient-wise agreement through q^n (both series must trust order n).
bool agree_through(const QSeries& a, const QSeries& b, int n);

/// sigma_nu(n) = sum of d^nu over divisors d of n, exact.
Int divisor_sigma(unsigned nu, unsigned n);

/// Weight 2k Eisenstein series G_{2k} = -B_{2k}/2k + 2 sum sigma_{2k-1}(n) q^n.
QSeries eisenstein_g(unsigned k, int truncation);

/// Normalized Eisenstein series E_{2j} = 1 - (4j/B_{2j}) sum sigma_{2j-1}(n) q^n,
/// so the constant term is exactly 1.  As q-series, G_{2j} = -(B_{2j}/2j) E_{2j}.
QSeries eisenstein_e(unsigned j, int truncation);

/// q^{1/8}-cleared eta cube: sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2},
/// which equals prod (1-q^n)^3.
QSeries eta_cubed(int truncation);

/// sum_{n>=0} (-1)^n (2n+1)^{2k+1} q^{n(n+1)/2}, the numerator of U_{2k}.
QSeries odd_theta_numerator(unsigned k, int truncation);

}  // namespace genera

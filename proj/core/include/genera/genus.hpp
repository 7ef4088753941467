#pragma once

#include <vector>

#include "genera/qseries.hpp"
#include "genera/quasipoly.hpp"
#include "genera/report.hpp"
#include "genera/sympoly.hpp"

namespace genera {

/// Polynomial in one formal variable w with QSeries coefficients, dense up
/// to degree_cap.  Used with w = (2 pi i z)^2, which keeps the Witten-genus
/// expansions rational: coefficients are taken "per (2 pi i z)^{2k}".
class QSeriesPoly {
public:
    QSeriesPoly(int degree_cap, int q_order);

    int degree_cap() const { return degree_cap_; }
    int q_order() const { return q_order_; }

    const QSeries& coeff(int d) const;
    void set_coeff(int d, QSeries c);

    QSeriesPoly operator+(const QSeriesPoly& o) const;
    QSeriesPoly operator-(const QSeriesPoly& o) const;
    QSeriesPoly operator*(const QSeriesPoly& o) const;  // truncates at degree_cap

    /// exp for a polynomial with zero degree-0 coefficient.
    QSeriesPoly exp() const;

    /// Multiplicative inverse; degree-0 coefficient must be the constant 1.
    QSeriesPoly inverse() const;

    static QSeriesPoly one(int degree_cap, int q_order);

    bool operator==(const QSeriesPoly&) const = default;

private:
    int degree_cap_;
    int q_order_;
    std::vector<QSeries> coeff_;
};

/// log Q_W as a w-polynomial: coefficient of w^j is G_{2j}/(2j)! for j >= 2
/// and zero for j < 2.
QSeriesPoly witten_log_series(int degree_cap, int q_order);

/// A-roof genus coefficient in the Pontryagin basis.  Computed twice, by the
/// characteristic-series route and by the trace route, and asserted equal
/// (throws std::runtime_error on mismatch).
SymPoly ahat_genus(unsigned k);

/// L genus coefficient in the Pontryagin basis, same double computation.
SymPoly l_genus(unsigned k);

/// Ramanujan's U_{2k}: the odd-power theta numerator divided by the cleared
/// eta cube, via exact multiplication by the inverse series.
QSeries ramanujan_u(unsigned k, int truncation);

/// Coefficient of (2 pi i z)^{2k} in Q_W as an exact q-series.  Computed by
/// the partition sum over the log-coefficients and cross-checked against the
/// z/sigma route (series exp of -log Q_W, then inversion); throws
/// std::runtime_error if the two routes disagree.
QSeries witten_coefficient(unsigned k, int q_order);

/// Same coefficient as an exact G-basis polynomial (no G_2 terms appear).
QuasiPoly witten_quasipoly(unsigned k);

/// Checks, through q^truncation:
///   (1) U_{2k} = 4^k (2k+1)! * [E-trace of phi_U expanded as q-series];
///   (2) q-series of the G-trace of phi_AHat equals (-1)^k times the
///       q-series of the E-trace of |phi_U|;
/// and the sign laws: every E-basis coefficient of the converted A-roof
/// trace has sign (-1)^k, and its signs differ from the U-trace exactly at
/// partitions with an odd number of parts.
Report verify_theorem_1_5(unsigned k, int truncation);

}  // namespace genera

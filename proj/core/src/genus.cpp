#include "genera/genus.hpp"

#include <sstream>
#include <stdexcept>

namespace genera {

QSeriesPoly::QSeriesPoly(int degree_cap, int q_order)
    : degree_cap_(degree_cap), q_order_(q_order),
      coeff_(static_cast<size_t>(degree_cap) + 1, QSeries(q_order)) {
    if (degree_cap < 0) throw std::domain_error("QSeriesPoly: negative degree cap");
}

const QSeries& QSeriesPoly::coeff(int d) const {
    if (d < 0 || d > degree_cap_) throw std::out_of_range("QSeriesPoly::coeff");
    return coeff_[static_cast<size_t>(d)];
}

void QSeriesPoly::set_coeff(int d, QSeries c) {
    if (d < 0 || d > degree_cap_) throw std::out_of_range("QSeriesPoly::set_coeff");
    if (c.truncation() != q_order_)
        throw std::domain_error("QSeriesPoly::set_coeff: q-truncation mismatch");
    coeff_[static_cast<size_t>(d)] = std::move(c);
}

QSeriesPoly QSeriesPoly::one(int degree_cap, int q_order) {
    QSeriesPoly f(degree_cap, q_order);
    f.set_coeff(0, QSeries::one(q_order));
    return f;
}

QSeriesPoly QSeriesPoly::operator+(const QSeriesPoly& o) const {
    if (degree_cap_ != o.degree_cap_ || q_order_ != o.q_order_)
        throw std::domain_error("QSeriesPoly::operator+: shape mismatch");
    QSeriesPoly r(degree_cap_, q_order_);
    for (int d = 0; d <= degree_cap_; ++d) r.set_coeff(d, coeff(d) + o.coeff(d));
    return r;
}

QSeriesPoly QSeriesPoly::operator-(const QSeriesPoly& o) const {
    if (degree_cap_ != o.degree_cap_ || q_order_ != o.q_order_)
        throw std::domain_error("QSeriesPoly::operator-: shape mismatch");
    QSeriesPoly r(degree_cap_, q_order_);
    for (int d = 0; d <= degree_cap_; ++d) r.set_coeff(d, coeff(d) - o.coeff(d));
    return r;
}

QSeriesPoly QSeriesPoly::operator*(const QSeriesPoly& o) const {
    if (degree_cap_ != o.degree_cap_ || q_order_ != o.q_order_)
        throw std::domain_error("QSeriesPoly::operator*: shape mismatch");
    QSeriesPoly r(degree_cap_, q_order_);
    for (int a = 0; a <= degree_cap_; ++a) {
        if (coeff(a).is_zero()) continue;
        for (int b = 0; a + b <= degree_cap_; ++b)
            r.set_coeff(a + b, r.coeff(a + b) + coeff(a) * o.coeff(b));
    }
    return r;
}

QSeriesPoly QSeriesPoly::exp() const {
    if (!coeff(0).is_zero()) throw std::domain_error("QSeriesPoly::exp: nonzero degree-0 term");
    QSeriesPoly g(degree_cap_, q_order_);
    g.set_coeff(0, QSeries::one(q_order_));
    // n g_n = sum_{i=1}^{n} i f_i g_{n-i}
    for (int n = 1; n <= degree_cap_; ++n) {
        QSeries acc(q_order_);
        for (int i = 1; i <= n; ++i)
            acc = acc + coeff(i).scaled(Rational(i)) * g.coeff(n - i);
        g.set_coeff(n, acc.scaled(Rational(1, n)));
    }
    return g;
}

QSeriesPoly QSeriesPoly::inverse() const {
    if (!(coeff(0) == QSeries::one(q_order_)))
        throw std::domain_error("QSeriesPoly::inverse: degree-0 term must be 1");
    QSeriesPoly h(degree_cap_, q_order_);
    h.set_coeff(0, QSeries::one(q_order_));
    for (int n = 1; n <= degree_cap_; ++n) {
        QSeries acc(q_order_);
        for (int i = 1; i <= n; ++i) acc = acc + coeff(i) * h.coeff(n - i);
        h.set_coeff(n, -acc);
    }
    return h;
}

QSeriesPoly witten_log_series(int degree_cap, int q_order) {
    QSeriesPoly f(degree_cap, q_order);
    for (int j = 2; j <= degree_cap; ++j)
        f.set_coeff(j, eisenstein_g(static_cast<unsigned>(j), q_order)
                           .scaled(Rational(Int(1), factorial(2 * static_cast<unsigned>(j)))));
    return f;
}

namespace {

SymPoly genus_double_route(const CharSeries& series, const PhiWeight& phi, unsigned k,
                           const char* what) {
    const SymPoly via_series = newton_s_to_p(genus_coefficient(series, k));
    const SymPoly via_trace =
        newton_s_to_p(quasi_to_sympoly(trace(phi, k, EisensteinBasis::G)));
    if (!(via_series == via_trace)) {
        std::ostringstream os;
        os << what << ": characteristic-series route and trace route disagree at k=" << k;
        throw std::runtime_error(os.str());
    }
    return via_series;
}

}  // namespace

SymPoly ahat_genus(unsigned k) {
    return genus_double_route(ahat_char_series(), phi_weight(PhiKind::AHat), k, "ahat_genus");
}

SymPoly l_genus(unsigned k) {
    return genus_double_route(l_char_series(), phi_weight(PhiKind::L), k, "l_genus");
}

QSeries ramanujan_u(unsigned k, int truncation) {
    return odd_theta_numerator(k, truncation) * eta_cubed(truncation).inverse();
}

QuasiPoly witten_quasipoly(unsigned k) {
    QuasiPoly out(EisensteinBasis::G, k);
    if (k == 0) {
        out.add_term(Partition(), 1);
        return out;
    }
    for (const auto& lam : enumerate_partitions(k)) {
        if (lam.multiplicity(1) > 0) continue;  // log Q_W has no w^1 term
        Rational c = 1;
        lam.for_each_part([&](unsigned j, unsigned m) {
            c *= Rational(Int(1), factorial(2 * j)).pow(m) / Rational(factorial(m));
        });
        out.add_term(lam, c);
    }
    return out;
}

QSeries witten_coefficient(unsigned k, int q_order) {
    // Route A: partition sum over the log-coefficients.
    const QSeries direct = quasi_to_qseries(witten_quasipoly(k), q_order);

    // Route B: sigma/z = exp(-log Q_W), then invert back to z/sigma = Q_W.
    const QSeriesPoly log_qw = witten_log_series(static_cast<int>(k), q_order);
    const QSeriesPoly zero(static_cast<int>(k), q_order);
    const QSeriesPoly sigma_over_z = (zero - log_qw).exp();
    const QSeries via_sigma = sigma_over_z.inverse().coeff(static_cast<int>(k));

    if (!(direct == via_sigma)) {
        std::ostringstream os;
        os << "witten_coefficient: partition-sum and z/sigma routes disagree at k=" << k;
        throw std::runtime_error(os.str());
    }
    return direct;
}

Report verify_theorem_1_5(unsigned k, int truncation) {
    Report rep;
    rep.claim = "ramanujan-u equals scaled E-trace; A-roof trace is the signed |phi_U| E-trace";
    rep.k = static_cast<long>(k);
    rep.order = truncation;
    rep.pass = true;

    const QSeries u = ramanujan_u(k, truncation);
    const QuasiPoly u_trace = trace(phi_weight(PhiKind::U), k, EisensteinBasis::E);
    const Rational scale = Rational(4).pow(static_cast<long>(k)) * Rational(factorial(2 * k + 1));
    const QSeries scaled_trace = quasi_to_qseries(u_trace, truncation).scaled(scale);
    if (!(u == scaled_trace)) {
        rep.pass = false;
        for (int n = 0; n <= truncation; ++n)
            if (u.coeff(n) != scaled_trace.coeff(n)) {
                rep.diff.push_back("U_{2k} vs scaled E-trace differ at q^" + std::to_string(n) +
                                   ": " + u.coeff(n).str() + " vs " + scaled_trace.coeff(n).str());
                if (rep.diff.size() >= 5) break;
            }
    }

    const QuasiPoly ahat_g = trace(phi_weight(PhiKind::AHat), k, EisensteinBasis::G);
    const QuasiPoly abs_trace = trace(phi_weight(PhiKind::AbsU), k, EisensteinBasis::E);
    const QSeries lhs = quasi_to_qseries(ahat_g, truncation);
    const int sign = (k % 2 == 0) ? 1 : -1;
    const QSeries rhs = quasi_to_qseries(abs_trace, truncation).scaled(sign);
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.diff.push_back("A-roof trace q-series differs from (-1)^k |phi_U| E-trace");
    }

    // Sign laws of the remark: in the E basis every A-roof coefficient
    // carries sign (-1)^k, and the sign flips against the U-trace happen
    // exactly at partitions with odd length.
    const QuasiPoly ahat_e = basis_convert(ahat_g);
    for (const auto& lam : enumerate_partitions(k)) {
        const Rational a = ahat_e.coeff(lam);
        const Rational ut = u_trace.coeff(lam);
        if (a.sign() != sign) {
            rep.pass = false;
            rep.diff.push_back("E-basis coefficient at " + lam.str() + " has sign " +
                               std::to_string(a.sign()) + ", expected " + std::to_string(sign));
        }
        const bool flipped = a.sign() != ut.sign();
        const bool odd_length = lam.length() % 2 == 1;
        if (flipped != odd_length) {
            rep.pass = false;
            rep.diff.push_back("sign-flip set mismatch at " + lam.str());
        }
    }
    return rep;
}

}  // namespace genera

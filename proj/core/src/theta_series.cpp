#include "genera/theta_series.hpp"

#include <stdexcept>

namespace genera {

ThetaSeries::ThetaSeries(int q_truncation) : qtrunc_(q_truncation) {
    if (q_truncation < 0) throw std::domain_error("ThetaSeries: negative truncation");
}

Rational ThetaSeries::coeff(int v_exp, int q_exp) const {
    auto it = coeff_.find({q_exp, v_exp});
    return it == coeff_.end() ? Rational(0) : it->second;
}

void ThetaSeries::add_term(int v_exp, int q_exp, const Rational& c) {
    if (q_exp > qtrunc_) return;
    auto key = std::make_pair(q_exp, v_exp);
    auto [it, fresh] = coeff_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeff_.erase(it);
    }
}

ThetaSeries ThetaSeries::operator-() const {
    ThetaSeries r(qtrunc_);
    for (const auto& [k, c] : coeff_) r.coeff_.emplace(k, -c);
    return r;
}

ThetaSeries ThetaSeries::operator+(const ThetaSeries& o) const {
    ThetaSeries r(std::min(qtrunc_, o.qtrunc_));
    for (const auto& [k, c] : coeff_)
        if (k.first <= r.qtrunc_) r.coeff_.emplace(k, c);
    for (const auto& [k, c] : o.coeff_)
        if (k.first <= r.qtrunc_) r.add_term(k.second, k.first, c);
    return r;
}

ThetaSeries ThetaSeries::operator-(const ThetaSeries& o) const { return *this + (-o); }

ThetaSeries ThetaSeries::operator*(const ThetaSeries& o) const {
    ThetaSeries r(std::min(qtrunc_, o.qtrunc_));
    for (const auto& [ka, ca] : coeff_) {
        if (ka.first > r.qtrunc_) break;
        for (const auto& [kb, cb] : o.coeff_) {
            const int q = ka.first + kb.first;
            if (q > r.qtrunc_) break;
            r.add_term(ka.second + kb.second, q, ca * cb);
        }
    }
    return r;
}

ThetaSeries ThetaSeries::operator*(const QSeries& o) const {
    ThetaSeries r(std::min(qtrunc_, o.truncation()));
    for (const auto& [ka, ca] : coeff_) {
        if (ka.first > r.qtrunc_) break;
        for (const auto& [nb, cb] : o.coefficients()) {
            const int q = ka.first + nb;
            if (q > r.qtrunc_) break;
            r.add_term(ka.second, q, ca * cb);
        }
    }
    return r;
}

ThetaSeries ThetaSeries::scaled(const Rational& c) const {
    ThetaSeries r(qtrunc_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeff_) r.coeff_.emplace(k, v * c);
    return r;
}

ThetaSeries ThetaSeries::substitute_v_to_minus_inverse() const {
    ThetaSeries r(qtrunc_);
    for (const auto& [k, c] : coeff_) {
        const auto& [q, v] = k;
        r.add_term(-v, q, (v % 2 == 0) ? c : -c);
    }
    return r;
}

ThetaSeries theta_product(int q_truncation) {
    ThetaSeries f(q_truncation);
    f.add_term(1, 0, 1);
    f.add_term(-1, 0, -1);
    // (1 - q^n)^{-2} = sum_{m>=0} (m+1) q^{nm}, applied factor by factor
    for (int n = 1; n <= q_truncation; ++n) {
        ThetaSeries u_factor(q_truncation);
        u_factor.add_term(0, 0, 1);
        u_factor.add_term(2, n, -1);
        ThetaSeries uinv_factor(q_truncation);
        uinv_factor.add_term(0, 0, 1);
        uinv_factor.add_term(-2, n, -1);
        QSeries denom(q_truncation);
        for (int m = 0; n * m <= q_truncation; ++m)
            denom.set_coeff(n * m, Rational(m + 1));
        f = f * u_factor * uinv_factor * denom;
    }
    return f;
}

}  // namespace genera

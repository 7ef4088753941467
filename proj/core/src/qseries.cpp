#include "genera/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace genera {

namespace {

std::vector<Rational> to_dense(const QSeries& f) {
    std::vector<Rational> d(static_cast<size_t>(f.truncation()) + 1, Rational(0));
    for (const auto& [n, c] : f.coefficients()) d[static_cast<size_t>(n)] = c;
    return d;
}

QSeries from_dense(const std::vector<Rational>& d, int trunc) {
    QSeries f(trunc);
    for (int n = 0; n <= trunc; ++n) f.set_coeff(n, d[static_cast<size_t>(n)]);
    return f;
}

}  // namespace

QSeries::QSeries(int truncation) : trunc_(truncation) {
    if (truncation < 0) throw std::domain_error("QSeries: negative truncation");
}

QSeries QSeries::constant(const Rational& c, int truncation) {
    QSeries f(truncation);
    f.set_coeff(0, c);
    return f;
}

QSeries QSeries::monomial(const Rational& c, int exponent, int truncation) {
    QSeries f(truncation);
    f.set_coeff(exponent, c);
    return f;
}

Rational QSeries::coeff(int n) const {
    if (n < 0) return 0;
    if (n > trunc_) throw std::out_of_range("QSeries::coeff: beyond trusted order");
    auto it = coeff_.find(n);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void QSeries::set_coeff(int n, const Rational& c) {
    if (n < 0 || n > trunc_) throw std::out_of_range("QSeries::set_coeff: bad exponent");
    if (c.is_zero())
        coeff_.erase(n);
    else
        coeff_[n] = c;
}

QSeries QSeries::operator-() const {
    QSeries r(trunc_);
    for (const auto& [n, c] : coeff_) r.coeff_.emplace(n, -c);
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(trunc_, o.trunc_));
    for (const auto& [n, c] : coeff_)
        if (n <= r.trunc_) r.coeff_[n] = c;
    for (const auto& [n, c] : o.coeff_) {
        if (n > r.trunc_) continue;
        auto [it, fresh] = r.coeff_.try_emplace(n, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.coeff_.erase(it);
        }
    }
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    const int trunc = std::min(trunc_, o.trunc_);
    QSeries r(trunc);
    for (const auto& [na, ca] : coeff_) {
        if (na > trunc) break;
        for (const auto& [nb, cb] : o.coeff_) {
            const int n = na + nb;
            if (n > trunc) break;
            auto [it, fresh] = r.coeff_.try_emplace(n, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    for (auto it = r.coeff_.begin(); it != r.coeff_.end();)
        it = it->second.is_zero() ? r.coeff_.erase(it) : std::next(it);
    return r;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries r(trunc_);
    if (c.is_zero()) return r;
    for (const auto& [n, v] : coeff_) r.coeff_.emplace(n, v * c);
    return r;
}

QSeries QSeries::truncated(int n) const {
    if (n > trunc_) throw std::domain_error("QSeries::truncated: cannot extend trust");
    QSeries r(n);
    for (const auto& [e, c] : coeff_)
        if (e <= n) r.coeff_.emplace(e, c);
    return r;
}

QSeries QSeries::derivative() const {
    if (trunc_ == 0) return QSeries(0);
    QSeries r(trunc_ - 1);
    for (const auto& [n, c] : coeff_)
        if (n >= 1 && n - 1 <= r.trunc_) r.coeff_.emplace(n - 1, c * Rational(n));
    return r;
}

QSeries QSeries::inverse() const {
    const Rational c0 = coeff(0);
    if (c0.is_zero()) throw std::domain_error("QSeries::inverse: zero constant term");
    const auto g = to_dense(*this);
    std::vector<Rational> h(g.size(), Rational(0));
    const Rational inv0 = c0.inverse();
    h[0] = inv0;
    for (int n = 1; n <= trunc_; ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) acc += g[static_cast<size_t>(i)] * h[static_cast<size_t>(n - i)];
        h[static_cast<size_t>(n)] = -acc * inv0;
    }
    return from_dense(h, trunc_);
}

QSeries QSeries::pow(unsigned e) const {
    QSeries acc = QSeries::one(trunc_);
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QSeries exp_series(const QSeries& f) {
    if (!f.coeff(0).is_zero()) throw std::domain_error("exp_series: nonzero constant term");
    const int trunc = f.truncation();
    const auto ff = to_dense(f);
    std::vector<Rational> g(ff.size(), Rational(0));
    g[0] = 1;
    // g' = g f'  =>  n g_n = sum_{i=1}^{n} i f_i g_{n-i}
    for (int n = 1; n <= trunc; ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i)
            acc += Rational(i) * ff[static_cast<size_t>(i)] * g[static_cast<size_t>(n - i)];
        g[static_cast<size_t>(n)] = acc / Rational(n);
    }
    return from_dense(g, trunc);
}

QSeries log_series(const QSeries& g) {
    if (!g.coeff(0).is_one()) throw std::domain_error("log_series: constant term must be 1");
    const int trunc = g.truncation();
    const auto gg = to_dense(g);
    std::vector<Rational> f(gg.size(), Rational(0));
    // n g_n = sum_{i=1}^{n} i f_i g_{n-i}  =>  n f_n = n g_n - sum_{i<n} i f_i g_{n-i}
    for (int n = 1; n <= trunc; ++n) {
        Rational acc = Rational(n) * gg[static_cast<size_t>(n)];
        for (int i = 1; i < n; ++i)
            acc -= Rational(i) * f[static_cast<size_t>(i)] * gg[static_cast<size_t>(n - i)];
        f[static_cast<size_t>(n)] = acc / Rational(n);
    }
    return from_dense(f, trunc);
}

bool agree_through(const QSeries& a, const QSeries& b, int n) {
    if (a.truncation() < n || b.truncation() < n)
        throw std::domain_error("agree_through: order exceeds trusted truncation");
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return false;
    return true;
}

Int divisor_sigma(unsigned nu, unsigned n) {
    Int acc = 0;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int dp;
        mpz_ui_pow_ui(dp.get_mpz_t(), d, nu);
        acc += dp;
        const unsigned e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dp.get_mpz_t(), e, nu);
            acc += dp;
        }
    }
    return acc;
}

QSeries eisenstein_g(unsigned k, int truncation) {
    if (k < 1) throw std::domain_error("eisenstein_g: k >= 1 required");
    QSeries f(truncation);
    f.set_coeff(0, -bernoulli(2 * k) / Rational(2 * static_cast<long>(k)));
    for (int n = 1; n <= truncation; ++n)
        f.set_coeff(n, Rational(2 * divisor_sigma(2 * k - 1, static_cast<unsigned>(n))));
    return f;
}

QSeries eisenstein_e(unsigned j, int truncation) {
    if (j < 1) throw std::domain_error("eisenstein_e: j >= 1 required");
    QSeries f(truncation);
    f.set_coeff(0, 1);
    const Rational scale = Rational(-4 * static_cast<long>(j)) / bernoulli(2 * j);
    for (int n = 1; n <= truncation; ++n)
        f.set_coeff(n, scale * Rational(divisor_sigma(2 * j - 1, static_cast<unsigned>(n))));
    return f;
}

QSeries eta_cubed(int truncation) {
    QSeries f(truncation);
    for (unsigned n = 0;; ++n) {
        const unsigned e = n * (n + 1) / 2;
        if (static_cast<int>(e) > truncation) break;
        f.set_coeff(static_cast<int>(e), Rational((n % 2 ? -1L : 1L) * (2L * n + 1)));
    }
    return f;
}

QSeries odd_theta_numerator(unsigned k, int truncation) {
    QSeries f(truncation);
    for (unsigned n = 0;; ++n) {
        const unsigned e = n * (n + 1) / 2;
        if (static_cast<int>(e) > truncation) break;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2 * n + 1, 2 * k + 1);
        if (n % 2) p = -p;
        f.set_coeff(static_cast<int>(e), Rational(p));
    }
    return f;
}

}  // namespace genera

#include "genera/sympoly.hpp"

#include <stdexcept>
#include <vector>

namespace genera {

SymPoly SymPoly::monomial(SymBasis basis, const Partition& lam, const Rational& c) {
    SymPoly f(basis, lam.weight());
    f.add_term(lam, c);
    return f;
}

Rational SymPoly::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& lam, const Rational& c) {
    if (lam.weight() != weight_)
        throw std::domain_error("SymPoly::add_term: partition weight mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r(basis_, weight_);
    for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, -c);
    return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    if (basis_ != o.basis_ || weight_ != o.weight_)
        throw std::domain_error("SymPoly::operator+: basis/weight mismatch");
    SymPoly r = *this;
    for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    if (basis_ != o.basis_) throw std::domain_error("SymPoly::operator*: basis mismatch");
    SymPoly r(basis_, weight_ + o.weight_);
    for (const auto& [la, ca] : terms_)
        for (const auto& [lb, cb] : o.terms_) r.add_term(la * lb, ca * cb);
    return r;
}

SymPoly SymPoly::scaled(const Rational& c) const {
    SymPoly r(basis_, weight_);
    if (c.is_zero()) return r;
    for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
    return r;
}

SymPoly SymPoly::pow(unsigned e) const {
    SymPoly acc = SymPoly::monomial(basis_, Partition(), 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

namespace {

// s_n as a Pontryagin polynomial, and p_n as a power-sum polynomial, by the
// Newton recurrences.  Small n only; recomputed per call site via cache.
std::vector<SymPoly> power_sums_in_p(unsigned n_max) {
    std::vector<SymPoly> s;
    s.push_back(SymPoly::monomial(SymBasis::Pontryagin, Partition(), 1));  // s_0 := 1 (unused)
    for (unsigned n = 1; n <= n_max; ++n) {
        SymPoly acc(SymBasis::Pontryagin, n);
        for (unsigned i = 1; i < n; ++i) {
            const SymPoly term = SymPoly::monomial(SymBasis::Pontryagin, Partition::single(i),
                                                   (i % 2 == 1) ? Rational(1) : Rational(-1));
            acc = acc + (term * s[n - i]);
        }
        acc.add_term(Partition::single(n),
                     (n % 2 == 1) ? Rational(static_cast<long>(n)) : Rational(-static_cast<long>(n)));
        s.push_back(acc);
    }
    return s;
}

std::vector<SymPoly> elementaries_in_s(unsigned n_max) {
    std::vector<SymPoly> p;
    p.push_back(SymPoly::monomial(SymBasis::PowerSum, Partition(), 1));  // p_0 = 1
    for (unsigned n = 1; n <= n_max; ++n) {
        SymPoly acc(SymBasis::PowerSum, n);
        for (unsigned i = 1; i <= n; ++i) {
            const SymPoly term = SymPoly::monomial(SymBasis::PowerSum, Partition::single(i),
                                                   (i % 2 == 1) ? Rational(1) : Rational(-1));
            acc = acc + (term * p[n - i]);
        }
        p.push_back(acc.scaled(Rational(1, static_cast<long>(n))));
    }
    return p;
}

SymPoly rewrite(const SymPoly& f, const std::vector<SymPoly>& images, SymBasis target) {
    SymPoly out(target, f.weight());
    for (const auto& [lam, c] : f.terms()) {
        SymPoly mono = SymPoly::monomial(target, Partition(), c);
        lam.for_each_part([&](unsigned j, unsigned m) { mono = mono * images[j].pow(m); });
        out = out + mono;
    }
    return out;
}

}  // namespace

SymPoly newton_s_to_p(const SymPoly& f) {
    if (f.basis() != SymBasis::PowerSum)
        throw std::domain_error("newton_s_to_p: expected a power-sum polynomial");
    return rewrite(f, power_sums_in_p(f.weight()), SymBasis::Pontryagin);
}

SymPoly newton_p_to_s(const SymPoly& f) {
    if (f.basis() != SymBasis::Pontryagin)
        throw std::domain_error("newton_p_to_s: expected a Pontryagin polynomial");
    return rewrite(f, elementaries_in_s(f.weight()), SymBasis::PowerSum);
}

CharSeries ahat_char_series() {
    return {CharSeries::Name::AHat, [](unsigned j) {
                return -bernoulli(2 * j) / Rational(Int(2 * j) * factorial(2 * j));
            }};
}

CharSeries l_char_series() {
    return {CharSeries::Name::L, [](unsigned j) {
                Int p4;
                mpz_ui_pow_ui(p4.get_mpz_t(), 4, j);
                return Rational(p4 * (p4 - 2)) * bernoulli(2 * j) /
                       Rational(Int(2 * j) * factorial(2 * j));
            }};
}

SymPoly genus_coefficient(const CharSeries& q, unsigned k) {
    SymPoly out(SymBasis::PowerSum, k);
    for (const auto& lam : enumerate_partitions(k)) {
        Rational c = 1;
        lam.for_each_part([&](unsigned j, unsigned m) {
            c *= q.log_coefficient(j).pow(m) / Rational(factorial(m));
        });
        out.add_term(lam, c);
    }
    return out;
}

}  // namespace genera

#include "genera/quasipoly.hpp"

#include <stdexcept>

namespace genera {

QuasiPoly QuasiPoly::monomial(EisensteinBasis basis, const Partition& lam, const Rational& c) {
    QuasiPoly f(basis, lam.weight());
    f.add_term(lam, c);
    return f;
}

Rational QuasiPoly::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QuasiPoly::add_term(const Partition& lam, const Rational& c) {
    if (lam.weight() != k_)
        throw std::domain_error("QuasiPoly::add_term: partition weight mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuasiPoly QuasiPoly::operator-() const {
    QuasiPoly r(basis_, k_);
    for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, -c);
    return r;
}

QuasiPoly QuasiPoly::operator+(const QuasiPoly& o) const {
    if (basis_ != o.basis_ || k_ != o.k_)
        throw std::domain_error("QuasiPoly::operator+: basis/weight mismatch");
    QuasiPoly r = *this;
    for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
    return r;
}

QuasiPoly QuasiPoly::operator-(const QuasiPoly& o) const { return *this + (-o); }

QuasiPoly QuasiPoly::scaled(const Rational& c) const {
    QuasiPoly r(basis_, k_);
    if (c.is_zero()) return r;
    for (const auto& [lam, v] : terms_) r.terms_.emplace(lam, v * c);
    return r;
}

QuasiPoly trace(const PhiWeight& phi, unsigned k, EisensteinBasis basis) {
    QuasiPoly out(basis, k);
    if (k == 0) {
        out.add_term(Partition(), 1);
        return out;
    }
    for (const auto& lam : enumerate_partitions(k)) out.add_term(lam, phi_eval(phi, lam));
    return out;
}

QuasiPoly basis_convert(const QuasiPoly& f) {
    const bool to_e = f.basis() == EisensteinBasis::G;
    QuasiPoly out(to_e ? EisensteinBasis::E : EisensteinBasis::G, f.k());
    for (const auto& [lam, c] : f.terms()) {
        Rational scale = 1;
        lam.for_each_part([&](unsigned j, unsigned m) {
            scale *= (bernoulli(2 * j) / Rational(2 * static_cast<long>(j))).pow(m);
        });
        out.add_term(lam, to_e ? c * scale : c / scale);
    }
    return out;
}

QSeries quasi_to_qseries(const QuasiPoly& f, int truncation) {
    std::map<unsigned, QSeries> gens;  // per-call cache of generator expansions
    const auto generator = [&](unsigned j) -> const QSeries& {
        auto it = gens.find(j);
        if (it == gens.end())
            it = gens.emplace(j, f.basis() == EisensteinBasis::G ? eisenstein_g(j, truncation)
                                                                 : eisenstein_e(j, truncation))
                     .first;
        return it->second;
    };
    QSeries out(truncation);
    for (const auto& [lam, c] : f.terms()) {
        QSeries term = QSeries::constant(c, truncation);
        lam.for_each_part([&](unsigned j, unsigned m) { term = term * generator(j).pow(m); });
        out = out + term;
    }
    return out;
}

SymPoly quasi_to_sympoly(const QuasiPoly& f) {
    if (f.basis() != EisensteinBasis::G)
        throw std::domain_error("quasi_to_sympoly: expected a G-basis polynomial");
    SymPoly out(SymBasis::PowerSum, f.k());
    for (const auto& [lam, c] : f.terms()) {
        Rational scale = 1;
        lam.for_each_part([&](unsigned j, unsigned m) {
            scale *= (bernoulli(2 * j) / Rational(2 * static_cast<long>(j))).pow(m);
        });
        out.add_term(lam, c * scale);
    }
    return out;
}

}  // namespace genera

#pragma once

#include <map>

#include "genera/partition.hpp"
#include "genera/qseries.hpp"
#include "genera/rational.hpp"
#include "genera/sympoly.hpp"

namespace genera {

enum class EisensteinBasis { G, E };

/// Polynomial in Eisenstein generators of pure weight 2k, indexed by
/// partitions of k: the key lambda = (1^{m_1},...,k^{m_k}) stands for the
/// monomial G_2^{m_1} G_4^{m_2} ... G_{2k}^{m_k} (or the same in E_{2j}).
class QuasiPoly {
public:
    QuasiPoly(EisensteinBasis basis, unsigned k) : basis_(basis), k_(k) {}

    static QuasiPoly monomial(EisensteinBasis basis, const Partition& lam, const Rational& c);

    EisensteinBasis basis() const { return basis_; }
    unsigned k() const { return k_; }
    unsigned weight() const { return 2 * k_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lam) const;
    void add_term(const Partition& lam, const Rational& c);

    QuasiPoly operator-() const;
    QuasiPoly operator+(const QuasiPoly& o) const;
    QuasiPoly operator-(const QuasiPoly& o) const;
    QuasiPoly scaled(const Rational& c) const;

    bool operator==(const QuasiPoly&) const = default;

private:
    EisensteinBasis basis_;
    unsigned k_;
    std::map<Partition, Rational> terms_;
};

/// Partition Eisenstein trace: sum over lambda |- k of phi(lambda) times the
/// lambda-monomial in the requested basis.  No basis conversion is applied;
/// phi is read directly in that basis (the G-trace vs the E-trace).  k = 0
/// returns the constant 1.
QuasiPoly trace(const PhiWeight& phi, unsigned k, EisensteinBasis basis);

/// Formal re-coordinatization by the correspondence G_{2j} <-> (B_{2j}/2j) E_{2j}:
/// G -> E multiplies the lambda-term by prod_j (B_{2j}/2j)^{m_j}, E -> G by the
/// reciprocal; converting twice is the identity.  Note this is the symbol
/// correspondence used for the genus tables, not a q-expansion identity: the
/// q-series of E_{2j} is normalized to constant term 1, while -(B_{2j}/2j) E_{2j}
/// is the q-expansion of G_{2j}.
QuasiPoly basis_convert(const QuasiPoly& f);

/// Substitutes the Eisenstein q-expansions for the generators and multiplies
/// out exactly through q^truncation.
QSeries quasi_to_qseries(const QuasiPoly& f, int truncation);

/// Formal substitution G_{2j} -> (B_{2j}/2j) s_j on a G-basis polynomial,
/// producing a weight-k power-sum polynomial.
SymPoly quasi_to_sympoly(const QuasiPoly& f);

}  // namespace genera

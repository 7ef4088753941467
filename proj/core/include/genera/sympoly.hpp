#pragma once

#include <functional>
#include <map>

#include "genera/partition.hpp"
#include "genera/rational.hpp"

namespace genera {

/// s-basis: power sums s_j = x_1^j + x_2^j + ...; p-basis: elementary
/// symmetric functions of the x_i (the Pontryagin coordinates).
enum class SymBasis { PowerSum, Pontryagin };

/// Weighted-homogeneous symmetric-function polynomial of weight k: every
/// monomial prod_j b_j^{m_j} (b = s or p) is keyed by the partition
/// (1^{m_1}, ..., k^{m_k}) of k.  Zero coefficients are never stored.
class SymPoly {
public:
    SymPoly(SymBasis basis, unsigned weight) : basis_(basis), weight_(weight) {}

    static SymPoly monomial(SymBasis basis, const Partition& lam, const Rational& c);

    SymBasis basis() const { return basis_; }
    unsigned weight() const { return weight_; }
    const std::map<Partition, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Partition& lam) const;

    /// Accumulates c * monomial(lam); lam must have weight().
    void add_term(const Partition& lam, const Rational& c);

    SymPoly operator-() const;
    SymPoly operator+(const SymPoly& o) const;  // same basis and weight
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;  // same basis; weights add
    SymPoly scaled(const Rational& c) const;
    SymPoly pow(unsigned e) const;

    bool operator==(const SymPoly&) const = default;

private:
    SymBasis basis_;
    unsigned weight_;
    std::map<Partition, Rational> terms_;
};

/// Newton-Girard rewrite of a power-sum polynomial into the Pontryagin
/// basis, via s_n = p_1 s_{n-1} - p_2 s_{n-2} + ... + (-1)^{n-1} n p_n.
SymPoly newton_s_to_p(const SymPoly& f);

/// Inverse rewrite (p_n = (1/n) sum_{i=1}^{n} (-1)^{i-1} s_i p_{n-i});
/// round-trips with newton_s_to_p.
SymPoly newton_p_to_s(const SymPoly& f);

/// Characteristic power series with constant term 1, carried as the
/// log-coefficients c_j of log Q(z) = sum_{j>=1} c_j z^j.
struct CharSeries {
    enum class Name { AHat, L };
    Name name;
    std::function<Rational(unsigned)> log_coefficient;
};

/// Q(z) = (sqrt(z)/2)/sinh(sqrt(z)/2): c_j = -B_{2j} / ((2j)(2j)!).
CharSeries ahat_char_series();

/// Q(z) = sqrt(z)/tanh(sqrt(z)): c_j = 4^j (4^j - 2) B_{2j} / ((2j)(2j)!).
CharSeries l_char_series();

/// Weight-k genus coefficient in the power-sum basis,
///   b_k = sum_{lambda |- k} s_lambda prod_j (1/m_j!) c_j^{m_j},
/// the t^k coefficient of exp(sum c_j s_j t^j).
SymPoly genus_coefficient(const CharSeries& q, unsigned k);

}  // namespace genera

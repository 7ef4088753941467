#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

/// Integer partition in multiplicity form: mult()[i] counts parts of size
/// i + 1.  The empty partition (weight 0) is the default value.  Ordering is
/// by weight, then reverse-lexicographic on the descending part lists, so
/// for weight 3: (3) < (2,1) < (1,1,1).  That matches the enumeration order
/// and keeps every partition-keyed map deterministic.
class Partition {
public:
    Partition() = default;

    static Partition from_multiplicities(std::vector<std::uint32_t> mult);
    static Partition from_parts(const std::vector<unsigned>& parts);
    static Partition single(unsigned part, unsigned multiplicity = 1);

    unsigned weight() const;
    unsigned length() const;
    bool empty() const { return mult_.empty(); }

    /// Multiplicity of the given part size (part >= 1).
    unsigned multiplicity(unsigned part) const;
    unsigned max_part() const { return static_cast<unsigned>(mult_.size()); }
    const std::vector<std::uint32_t>& mult() const { return mult_; }

    /// Part list in descending order, e.g. (2,1) -> {2, 1}.
    std::vector<unsigned> parts() const;

    /// Multiset union: adds multiplicities (monomial product of s_lambda's).
    Partition operator*(const Partition& o) const;

    /// Calls f(part_size, multiplicity) for each part size present.
    template <class F>
    void for_each_part(F&& f) const {
        for (unsigned i = 0; i < mult_.size(); ++i)
            if (mult_[i] > 0) f(i + 1, static_cast<unsigned>(mult_[i]));
    }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const;

    /// "(2,1)"; the empty partition prints as "()".
    std::string str() const;

private:
    std::vector<std::uint32_t> mult_;  // trailing zeros trimmed
};

/// All partitions of k, each exactly once, in reverse-lexicographic order of
/// part lists: (k) first, (1^k) last.
std::vector<Partition> enumerate_partitions(unsigned k);

/// z_lambda = 1^{m_1} ... k^{m_k} m_1! ... m_k!; #{w in S_k of cycle type
/// lambda} = k!/z_lambda.
Int z_lambda(const Partition& lam);

/// Cycle index polynomial Z(S_k) as a partition-indexed coefficient map:
/// lambda |-> 1/z_lambda is the coefficient of prod_j x_j^{m_j}.
std::map<Partition, Rational> cycle_index(unsigned k);

enum class PhiKind { AHat, L, U, AbsU, Custom };

/// Partition weight function phi: built-ins cover the three genus weights
/// and |phi_U|; Custom is a library-level extension point (not reachable
/// from the CLI).
struct PhiWeight {
    PhiKind kind = PhiKind::Custom;
    std::function<Rational(const Partition&)> evaluator;
};

PhiWeight phi_weight(PhiKind kind);
PhiWeight custom_phi(std::function<Rational(const Partition&)> evaluator);

Rational phi_eval(const PhiWeight& w, const Partition& lam);

}  // namespace genera

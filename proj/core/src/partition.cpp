#include "genera/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace genera {

namespace {

void trim(std::vector<std::uint32_t>& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

Partition Partition::from_multiplicities(std::vector<std::uint32_t> mult) {
    Partition p;
    p.mult_ = std::move(mult);
    trim(p.mult_);
    return p;
}

Partition Partition::from_parts(const std::vector<unsigned>& parts) {
    std::vector<std::uint32_t> m;
    for (unsigned part : parts) {
        if (part == 0) throw std::domain_error("Partition: zero part");
        if (part > m.size()) m.resize(part, 0);
        ++m[part - 1];
    }
    return from_multiplicities(std::move(m));
}

Partition Partition::single(unsigned part, unsigned multiplicity) {
    if (part == 0) throw std::domain_error("Partition: zero part");
    std::vector<std::uint32_t> m(part, 0);
    m[part - 1] = multiplicity;
    return from_multiplicities(std::move(m));
}

unsigned Partition::weight() const {
    unsigned w = 0;
    for (unsigned i = 0; i < mult_.size(); ++i) w += (i + 1) * mult_[i];
    return w;
}

unsigned Partition::length() const {
    unsigned l = 0;
    for (auto m : mult_) l += m;
    return l;
}

unsigned Partition::multiplicity(unsigned part) const {
    if (part == 0 || part > mult_.size()) return 0;
    return mult_[part - 1];
}

std::vector<unsigned> Partition::parts() const {
    std::vector<unsigned> out;
    for (unsigned i = static_cast<unsigned>(mult_.size()); i-- > 0;)
        for (std::uint32_t c = 0; c < mult_[i]; ++c) out.push_back(i + 1);
    return out;
}

Partition Partition::operator*(const Partition& o) const {
    std::vector<std::uint32_t> m(std::max(mult_.size(), o.mult_.size()), 0);
    for (unsigned i = 0; i < mult_.size(); ++i) m[i] += mult_[i];
    for (unsigned i = 0; i < o.mult_.size(); ++i) m[i] += o.mult_[i];
    return from_multiplicities(std::move(m));
}

bool Partition::operator<(const Partition& o) const {
    const unsigned wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    const auto pa = parts(), pb = o.parts();
    // earlier in reverse-lex order == lexicographically greater part list
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::string Partition::str() const {
    std::string s = "(";
    const auto ps = parts();
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ps[i]);
    }
    return s + ")";
}

namespace {

void enumerate_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition::from_parts(acc));
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(unsigned k) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    enumerate_rec(k, k == 0 ? 1 : k, acc, out);
    return out;
}

Int z_lambda(const Partition& lam) {
    Int z = 1;
    lam.for_each_part([&](unsigned j, unsigned m) {
        Int jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), j, m);
        z *= jp * factorial(m);
    });
    return z;
}

std::map<Partition, Rational> cycle_index(unsigned k) {
    std::map<Partition, Rational> out;
    for (const auto& lam : enumerate_partitions(k))
        out.emplace(lam, Rational(Int(1), z_lambda(lam)));
    return out;
}

namespace {

// prod_j (1/m_j!) * base(j)^{m_j}
Rational product_weight(const Partition& lam, const std::function<Rational(unsigned)>& base) {
    Rational acc = 1;
    lam.for_each_part([&](unsigned j, unsigned m) {
        acc *= base(j).pow(m) / Rational(factorial(m));
    });
    return acc;
}

}  // namespace

PhiWeight phi_weight(PhiKind kind) {
    switch (kind) {
        case PhiKind::AHat:
            return {kind, [](const Partition& lam) {
                        return product_weight(lam, [](unsigned j) {
                            return Rational(Int(-1), factorial(2 * j));
                        });
                    }};
        case PhiKind::L:
            return {kind, [](const Partition& lam) {
                        return product_weight(lam, [](unsigned j) {
                            Int p4;
                            mpz_ui_pow_ui(p4.get_mpz_t(), 4, j);
                            return Rational(p4 * (p4 - 2), factorial(2 * j));
                        });
                    }};
        case PhiKind::U:
            return {kind, [](const Partition& lam) {
                        return product_weight(lam, [](unsigned j) {
                            return bernoulli(2 * j) / Rational(Int(2 * j) * factorial(2 * j));
                        });
                    }};
        case PhiKind::AbsU:
            return {kind, [](const Partition& lam) {
                        return product_weight(lam, [](unsigned j) {
                            return bernoulli(2 * j).abs() / Rational(Int(2 * j) * factorial(2 * j));
                        });
                    }};
        case PhiKind::Custom:
            break;
    }
    throw std::domain_error("phi_weight: Custom has no built-in evaluator");
}

PhiWeight custom_phi(std::function<Rational(const Partition&)> evaluator) {
    return {PhiKind::Custom, std::move(evaluator)};
}

Rational phi_eval(const PhiWeight& w, const Partition& lam) {
    if (!w.evaluator) throw std::domain_error("phi_eval: empty evaluator");
    return w.evaluator(lam);
}

}  // namespace genera

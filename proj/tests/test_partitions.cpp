#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "genera/partition.hpp"

using namespace genera;

namespace {

// Independent partition counter: p(n, max part m) by recursion.
unsigned count_oracle(unsigned n, unsigned m) {
    if (n == 0) return 1;
    if (m == 0) return 0;
    unsigned acc = 0;
    for (unsigned p = std::min(n, m); p >= 1; --p) acc += count_oracle(n - p, p);
    return acc;
}

// Multivariate polynomial in x_1..x_k with partition-keyed monomials,
// graded by t: slices[k] is the t^k slice.  Used to expand
// exp(sum_j x_j t^j / j) independently of cycle_index.
using Slice = std::map<Partition, Rational>;

std::vector<Slice> exp_oracle(unsigned order) {
    std::vector<Slice> f(order + 1);  // the exponent: x_j t^j / j
    for (unsigned j = 1; j <= order; ++j)
        f[j][Partition::single(j)] = Rational(1, static_cast<long>(j));

    std::vector<Slice> acc(order + 1);
    acc[0][Partition()] = 1;  // exp = sum f^m / m!
    std::vector<Slice> power = acc;
    Rational inv_mfact = 1;
    for (unsigned m = 1; m <= order; ++m) {
        std::vector<Slice> next(order + 1);
        for (unsigned a = 0; a <= order; ++a)
            for (const auto& [la, ca] : power[a])
                for (unsigned b = 1; a + b <= order; ++b)
                    for (const auto& [lb, cb] : f[b]) next[a + b][la * lb] += ca * cb;
        power = next;
        inv_mfact /= Rational(static_cast<long>(m));
        for (unsigned k = 0; k <= order; ++k)
            for (const auto& [lam, c] : power[k]) acc[k][lam] += c * inv_mfact;
    }
    for (auto& slice : acc)
        for (auto it = slice.begin(); it != slice.end();)
            it = it->second.is_zero() ? slice.erase(it) : std::next(it);
    return acc;
}

}  // namespace

TEST_CASE("enumeration order and counts") {
    const auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    const auto p3 = enumerate_partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<unsigned>{3});
    CHECK(p3[1].parts() == std::vector<unsigned>{2, 1});
    CHECK(p3[2].parts() == std::vector<unsigned>{1, 1, 1});

    CHECK(enumerate_partitions(10).size() == 42);
    for (unsigned k = 0; k <= 18; ++k)
        CHECK(enumerate_partitions(k).size() == count_oracle(k, k == 0 ? 1 : k));
}

TEST_CASE("enumeration yields each partition once, in sorted order") {
    for (unsigned k : {5u, 8u, 11u}) {
        const auto ps = enumerate_partitions(k);
        std::set<std::vector<unsigned>> seen;
        for (const auto& lam : ps) {
            CHECK(lam.weight() == k);
            CHECK(seen.insert(lam.parts()).second);
        }
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
    }
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition::from_parts({1, 1, 1})) == 6);
    CHECK(z_lambda(Partition()) == 1);
    CHECK(z_lambda(Partition::from_parts({2, 1})) == 2);

    // conjugacy classes partition S_k: sum over lambda of k!/z_lambda = k!
    for (unsigned k = 1; k <= 12; ++k) {
        Int acc = 0;
        for (const auto& lam : enumerate_partitions(k)) acc += factorial(k) / z_lambda(lam);
        CHECK(acc == factorial(k));
    }
}

TEST_CASE("cycle index examples") {
    const auto z1 = cycle_index(1);
    REQUIRE(z1.size() == 1);
    CHECK(z1.at(Partition::single(1)) == Rational(1));

    // Z(S_3) = (x_1^3 + 3 x_1 x_2 + 2 x_3)/6
    const auto z3 = cycle_index(3);
    REQUIRE(z3.size() == 3);
    CHECK(z3.at(Partition::single(3)) == Rational(2, 6));
    CHECK(z3.at(Partition::from_parts({2, 1})) == Rational(3, 6));
    CHECK(z3.at(Partition::from_parts({1, 1, 1})) == Rational(1, 6));

    const auto z0 = cycle_index(0);
    REQUIRE(z0.size() == 1);
    CHECK(z0.at(Partition()) == Rational(1));
}

TEST_CASE("cycle index generating function through t-order 8") {
    const auto oracle = exp_oracle(8);
    for (unsigned k = 0; k <= 8; ++k) CHECK(cycle_index(k) == oracle[k]);
}

TEST_CASE("phi weights") {
    const auto ahat = phi_weight(PhiKind::AHat);
    CHECK(phi_eval(ahat, Partition::single(3)) == Rational(-1, 720));
    CHECK(phi_eval(ahat, Partition::from_parts({2, 1})) == Rational(1, 48));
    CHECK(phi_eval(phi_weight(PhiKind::U), Partition::single(1)) == Rational(1, 24));

    const auto u = phi_weight(PhiKind::U);
    const auto abs_u = phi_weight(PhiKind::AbsU);
    for (unsigned k = 1; k <= 12; ++k)
        for (const auto& lam : enumerate_partitions(k))
            CHECK(phi_eval(abs_u, lam) == phi_eval(u, lam).abs());
}

TEST_CASE("phi_AHat sign is (-1)^length") {
    const auto ahat = phi_weight(PhiKind::AHat);
    for (unsigned k = 1; k <= 10; ++k) {
        for (const auto& lam : enumerate_partitions(k)) {
            Rational unsigned_value = 1;
            lam.for_each_part([&](unsigned j, unsigned m) {
                unsigned_value *= Rational(Int(1), factorial(2 * j)).pow(m) / Rational(factorial(m));
            });
            const Rational expected =
                (lam.length() % 2 == 0) ? unsigned_value : -unsigned_value;
            CHECK(phi_eval(ahat, lam) == expected);
        }
    }
}

TEST_CASE("custom phi extension point") {
    const auto lengths = custom_phi([](const Partition& lam) {
        return Rational(static_cast<long>(lam.length()));
    });
    CHECK(phi_eval(lengths, Partition::from_parts({3, 2, 1})) == Rational(3));
    CHECK_THROWS_AS(phi_weight(PhiKind::Custom), std::domain_error);
}

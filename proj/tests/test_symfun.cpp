#include <doctest.h>

#include <random>

#include "genera/sympoly.hpp"

using namespace genera;

namespace {

SymPoly random_homogeneous(std::mt19937& rng, SymBasis basis, unsigned weight) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    SymPoly f(basis, weight);
    for (const auto& lam : enumerate_partitions(weight))
        f.add_term(lam, Rational(num(rng), den(rng)));
    return f;
}

}  // namespace

TEST_CASE("newton identities, tabulated cases") {
    // s_2 = p_1^2 - 2 p_2
    const SymPoly s2 = SymPoly::monomial(SymBasis::PowerSum, Partition::single(2), 1);
    SymPoly expect2(SymBasis::Pontryagin, 2);
    expect2.add_term(Partition::single(1, 2), 1);
    expect2.add_term(Partition::single(2), -2);
    CHECK(newton_s_to_p(s2) == expect2);

    // s_1^k = p_1^k
    for (unsigned k = 1; k <= 6; ++k) {
        const SymPoly s1k = SymPoly::monomial(SymBasis::PowerSum, Partition::single(1, k), 1);
        CHECK(newton_s_to_p(s1k) ==
              SymPoly::monomial(SymBasis::Pontryagin, Partition::single(1, k), 1));
    }

    // s_4 = p_1^4 - 4 p_1^2 p_2 + 4 p_1 p_3 + 2 p_2^2 - 4 p_4
    const SymPoly s4 = SymPoly::monomial(SymBasis::PowerSum, Partition::single(4), 1);
    SymPoly expect4(SymBasis::Pontryagin, 4);
    expect4.add_term(Partition::single(1, 4), 1);
    expect4.add_term(Partition::from_parts({2, 1, 1}), -4);
    expect4.add_term(Partition::from_parts({3, 1}), 4);
    expect4.add_term(Partition::from_parts({2, 2}), 2);
    expect4.add_term(Partition::single(4), -4);
    CHECK(newton_s_to_p(s4) == expect4);

    // p_1 = s_1 and p_2 = (s_1^2 - s_2)/2
    CHECK(newton_p_to_s(SymPoly::monomial(SymBasis::Pontryagin, Partition::single(1), 1)) ==
          SymPoly::monomial(SymBasis::PowerSum, Partition::single(1), 1));
    SymPoly expect_p2(SymBasis::PowerSum, 2);
    expect_p2.add_term(Partition::single(1, 2), Rational(1, 2));
    expect_p2.add_term(Partition::single(2), Rational(-1, 2));
    CHECK(newton_p_to_s(SymPoly::monomial(SymBasis::Pontryagin, Partition::single(2), 1)) ==
          expect_p2);
}

TEST_CASE("newton round trips on random homogeneous polynomials") {
    std::mt19937 rng(2024);
    for (unsigned weight = 1; weight <= 10; ++weight) {
        const SymPoly s = random_homogeneous(rng, SymBasis::PowerSum, weight);
        CHECK(newton_p_to_s(newton_s_to_p(s)) == s);
        const SymPoly p = random_homogeneous(rng, SymBasis::Pontryagin, weight);
        CHECK(newton_s_to_p(newton_p_to_s(p)) == p);
    }
}

TEST_CASE("genus coefficients from characteristic series") {
    CHECK(genus_coefficient(ahat_char_series(), 1) ==
          SymPoly::monomial(SymBasis::PowerSum, Partition::single(1), Rational(-1, 24)));
    CHECK(genus_coefficient(l_char_series(), 1) ==
          SymPoly::monomial(SymBasis::PowerSum, Partition::single(1), Rational(1, 3)));
    CHECK(genus_coefficient(ahat_char_series(), 0) ==
          SymPoly::monomial(SymBasis::PowerSum, Partition(), 1));
    CHECK(genus_coefficient(l_char_series(), 0) ==
          SymPoly::monomial(SymBasis::PowerSum, Partition(), 1));
}

TEST_CASE("generating-function multiplicativity for random log series") {
    std::mt19937 rng(55);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Rational> ca(7), cb(7);
        for (int j = 1; j <= 6; ++j) {
            ca[j] = Rational(num(rng), den(rng));
            cb[j] = Rational(num(rng), den(rng));
        }
        const CharSeries a{CharSeries::Name::AHat, [ca](unsigned j) { return ca.at(j); }};
        const CharSeries b{CharSeries::Name::AHat, [cb](unsigned j) { return cb.at(j); }};
        const CharSeries ab{CharSeries::Name::AHat,
                            [ca, cb](unsigned j) { return ca.at(j) + cb.at(j); }};
        for (unsigned k = 0; k <= 6; ++k) {
            SymPoly convolution(SymBasis::PowerSum, k);
            for (unsigned i = 0; i <= k; ++i)
                convolution = convolution + genus_coefficient(a, i) * genus_coefficient(b, k - i);
            CHECK(genus_coefficient(ab, k) == convolution);
        }
    }
}

TEST_CASE("A-roof table through k = 4 via the series route") {
    const auto table_entry = [](unsigned k) {
        return newton_s_to_p(genus_coefficient(ahat_char_series(), k));
    };
    SymPoly a2(SymBasis::Pontryagin, 2);
    a2.add_term(Partition::single(2), Rational(-4, 5760));
    a2.add_term(Partition::single(1, 2), Rational(7, 5760));
    CHECK(table_entry(2) == a2);

    SymPoly a4(SymBasis::Pontryagin, 4);
    a4.add_term(Partition::single(4), Rational(-192, 464486400));
    a4.add_term(Partition::from_parts({3, 1}), Rational(512, 464486400));
    a4.add_term(Partition::from_parts({2, 2}), Rational(208, 464486400));
    a4.add_term(Partition::from_parts({2, 1, 1}), Rational(-904, 464486400));
    a4.add_term(Partition::single(1, 4), Rational(381, 464486400));
    CHECK(table_entry(4) == a4);
}

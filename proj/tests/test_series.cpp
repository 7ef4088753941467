#include <doctest.h>

#include <random>
#include <stdexcept>

#include "genera/qseries.hpp"
#include "genera/sympoly.hpp"

using namespace genera;

namespace {

QSeries random_series(std::mt19937& rng, int trunc, bool zero_constant) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    QSeries f(trunc);
    for (int n = zero_constant ? 1 : 0; n <= trunc; ++n) f.set_coeff(n, Rational(num(rng), den(rng)));
    return f;
}

// trial-division sigma, independent of divisor_sigma
Int sigma_oracle(unsigned nu, unsigned n) {
    Int acc = 0;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) {
            Int p;
            mpz_ui_pow_ui(p.get_mpz_t(), d, nu);
            acc += p;
        }
    return acc;
}

}  // namespace

TEST_CASE("ring operations") {
    QSeries one_plus_q(5), one_minus_q(5);
    one_plus_q.set_coeff(0, 1);
    one_plus_q.set_coeff(1, 1);
    one_minus_q.set_coeff(0, 1);
    one_minus_q.set_coeff(1, -1);
    QSeries expect(5);
    expect.set_coeff(0, 1);
    expect.set_coeff(2, -1);
    CHECK(one_plus_q * one_minus_q == expect);

    QSeries geometric(10), g_minus(10);
    for (int n = 0; n <= 10; ++n) geometric.set_coeff(n, 1);
    g_minus.set_coeff(0, 1);
    g_minus.set_coeff(1, -1);
    CHECK(geometric * g_minus == QSeries::one(10));
}

TEST_CASE("truncation propagation takes the minimum") {
    QSeries a = QSeries::one(10), b = QSeries::one(6);
    CHECK((a * b).truncation() == 6);
    CHECK((a + b).truncation() == 6);
    CHECK_THROWS_AS(a.coeff(11), std::out_of_range);
}

TEST_CASE("exp and log") {
    QSeries q = QSeries::monomial(1, 1, 3);
    const QSeries e = exp_series(q);
    CHECK(e.coeff(0) == Rational(1));
    CHECK(e.coeff(1) == Rational(1));
    CHECK(e.coeff(2) == Rational(1, 2));
    CHECK(e.coeff(3) == Rational(1, 6));

    QSeries one_plus_q = QSeries::one(3) + q;
    const QSeries l = log_series(one_plus_q);
    CHECK(l.coeff(1) == Rational(1));
    CHECK(l.coeff(2) == Rational(-1, 2));
    CHECK(l.coeff(3) == Rational(1, 3));

    CHECK_THROWS_AS(exp_series(QSeries::one(4)), std::domain_error);
    CHECK_THROWS_AS(log_series(QSeries::monomial(1, 1, 4)), std::domain_error);
}

TEST_CASE("exp(log) round trip on the A-roof characteristic series") {
    // log Q = sum c_j z^j with the A-roof log-coefficients; exp must
    // reproduce 1 - z/24 + 7z^2/5760 - 31z^3/967680 + ...
    const auto q = ahat_char_series();
    QSeries logq(8);
    for (int j = 1; j <= 8; ++j) logq.set_coeff(j, q.log_coefficient(static_cast<unsigned>(j)));
    const QSeries series = exp_series(logq);
    CHECK(series.coeff(0) == Rational(1));
    CHECK(series.coeff(1) == Rational(-1, 24));
    CHECK(series.coeff(2) == Rational(7, 5760));
    CHECK(series.coeff(3) == Rational(-31, 967680));
    CHECK(log_series(series) == logq);
}

TEST_CASE("derivative of exp") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const QSeries f = random_series(rng, 12, /*zero_constant=*/true);
        const QSeries g = exp_series(f);
        CHECK(g.derivative() == (g * f.derivative()).truncated(11));
    }
}

TEST_CASE("series inverse") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries f = random_series(rng, 10, false);
        if (f.coeff(0).is_zero()) f.set_coeff(0, 3);
        CHECK(f * f.inverse() == QSeries::one(10));
    }
    CHECK_THROWS_AS(QSeries::monomial(1, 1, 4).inverse(), std::domain_error);
}

TEST_CASE("eisenstein G") {
    const QSeries g2 = eisenstein_g(1, 10);
    CHECK(g2.coeff(0) == Rational(-1, 12));
    CHECK(g2.coeff(1) == Rational(2));
    CHECK(eisenstein_g(2, 10).coeff(0) == Rational(1, 120));
    CHECK(eisenstein_g(2, 10).coeff(2) == Rational(18));  // 2 sigma_3(2)
    CHECK(eisenstein_g(3, 10).coeff(0) == Rational(-1, 252));

    for (unsigned k = 1; k <= 4; ++k) {
        const QSeries g = eisenstein_g(k, 30);
        for (unsigned n = 1; n <= 30; ++n)
            CHECK(g.coeff(static_cast<int>(n)) == Rational(2 * sigma_oracle(2 * k - 1, n)));
    }
}

TEST_CASE("eisenstein E") {
    CHECK(eisenstein_e(1, 5).coeff(1) == Rational(-24));
    CHECK(eisenstein_e(2, 5).coeff(0) == Rational(1));
    CHECK(eisenstein_e(3, 5).coeff(1) == Rational(-504));
    CHECK(eisenstein_e(2, 5).coeff(1) == Rational(240));
    for (unsigned j = 1; j <= 10; ++j) CHECK(eisenstein_e(j, 2).coeff(0) == Rational(1));

    // as q-series, G_{2j} = -(B_{2j}/2j) E_{2j}
    for (unsigned j = 1; j <= 6; ++j) {
        const Rational scale = -bernoulli(2 * j) / Rational(2 * static_cast<long>(j));
        CHECK(eisenstein_g(j, 20) == eisenstein_e(j, 20).scaled(scale));
    }
}

TEST_CASE("eta cubed") {
    const QSeries e3 = eta_cubed(40);
    CHECK(e3.coeff(0) == Rational(1));
    CHECK(e3.coeff(1) == Rational(-3));
    CHECK(e3.coeff(3) == Rational(5));
    CHECK(e3.coeff(6) == Rational(-7));
    CHECK(e3.coeff(2) == Rational(0));

    // product-expansion oracle: prod_{n=1}^{40} (1 - q^n)^3
    QSeries prod = QSeries::one(40);
    for (int n = 1; n <= 40; ++n) {
        QSeries factor = QSeries::one(40);
        factor.set_coeff(n, -1);
        prod = prod * factor * factor * factor;
    }
    CHECK(e3 == prod);
}

TEST_CASE("odd-power theta numerator") {
    const QSeries n1 = odd_theta_numerator(1, 10);
    CHECK(n1.coeff(0) == Rational(1));
    CHECK(n1.coeff(1) == Rational(-27));
    CHECK(n1.coeff(3) == Rational(125));
    CHECK(odd_theta_numerator(0, 10) == eta_cubed(10));
}

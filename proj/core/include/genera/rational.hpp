#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace genera {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero stored as 0/1.  This is the coefficient field for every
/// exact computation in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}          // NOLINT: implicit by design
    Rational(const Int& n) : v_(n) {}    // NOLINT
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "num" or "num/den".  Throws std::invalid_argument on garbage,
    /// std::domain_error on a zero denominator.
    static Rational parse(const std::string& s);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;            // throws std::domain_error on zero
    Rational pow(long e) const;          // negative e inverts; 0^neg throws

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "num" when den == 1, otherwise "num/den".
    std::string str() const;
    /// Always "num/den" (JSON wire form).
    std::string str_slashed() const;

    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

/// n!, exact.
Int factorial(unsigned long n);

/// C(n, k), exact.  Throws std::domain_error when k > n.
Int binomial(unsigned long n, unsigned long k);

/// Bernoulli number B_n under the B_1 = -1/2 convention, computed from the
/// defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and memoized.  The
/// cache is guarded by a mutex, so concurrent callers are safe.
Rational bernoulli(unsigned n);

}  // namespace genera

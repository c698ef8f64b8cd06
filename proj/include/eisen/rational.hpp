#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>

namespace eisen {

using Int = mpz_class;

/// Exact rational scalar, the coefficient type of everything in this
/// library. Always held in lowest terms with a positive denominator;
/// no operation ever rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, 3 * x reads naturally
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);

    /// Parses "p/q" or "p" (sign on the numerator). Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational from_string(const std::string& s);

    const Int& num() const { return v_.get_num(); }
    const Int& den() const { return v_.get_den(); }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    Rational operator-() const;

    /// *this += a*b through a reused scratch cell; the series kernels
    /// call this in their inner loops.
    void add_mul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, unsigned long e);

/// Exact square root, or nullopt when x is not the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);
Int int_pow(long base, unsigned long e);

}  // namespace eisen

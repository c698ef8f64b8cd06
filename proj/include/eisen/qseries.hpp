#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// Variable tag. W denotes the half-power variable w with q = w^2.
enum class Var : std::uint8_t { Q, W };

char var_symbol(Var v);

/// Truncated formal power series over Rational. A series of order N
/// carries exactly the coefficients of x^0 .. x^{N-1}; every operation
/// propagates the largest order that is certain from its inputs (the
/// minimum for sums and products). Values are immutable in normal use;
/// all arithmetic lives in free functions.
class QSeries {
public:
    QSeries(Var var, std::size_t order);  // zero series
    QSeries(Var var, std::vector<Rational> coeffs);

    static QSeries one(Var var, std::size_t order);
    static QSeries monomial(Var var, std::size_t order, const Rational& c, std::size_t k);
    static QSeries from_longs(Var var, std::initializer_list<long> coeffs);

    Var var() const { return var_; }
    std::size_t order() const { return c_.size(); }

    const Rational& coeff(std::size_t i) const;
    Rational& coeff_mut(std::size_t i);
    std::span<const Rational> coeffs() const { return c_; }

    bool is_zero() const;
    /// Index of the first nonzero coefficient, or nullopt when zero to order.
    std::optional<std::size_t> valuation() const;

private:
    Var var_;
    std::vector<Rational> c_;
};

// Ring operations. Binary operations require matching variable tags and
// return a result of order min(a.order, b.order).
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries scale(const QSeries& a, const Rational& c);
QSeries pow(const QSeries& a, unsigned long e);

/// Reciprocal of a unit series (nonzero constant term).
QSeries invert(const QSeries& a);

QSeries truncate(const QSeries& a, std::size_t order);

/// Multiplication by x^k; order grows by k.
QSeries shift_up(const QSeries& a, std::size_t k);

/// Division by x^k. The k low coefficients must vanish; the error
/// message reports the first offending index. Order shrinks by k.
QSeries shift_down(const QSeries& a, std::size_t k);

/// Substitutes q = w^2 into a Q-series, producing a W-series of twice
/// the order.
QSeries inflate(const QSeries& a);

/// Inverse of inflate. Throws if any odd-index coefficient is nonzero,
/// naming the offending index; this doubles as the test that a W-series
/// expression is genuinely a series in q.
QSeries deflate(const QSeries& a);

std::optional<std::size_t> first_odd_index(const QSeries& a);

/// x -> x^2 in the same variable; order doubles.
QSeries substitute_square(const QSeries& a);

/// Square root of c * x^(2v) * (unit), taking the branch whose leading
/// coefficient is +sqrt(c). Throws on odd valuation or a non-square
/// leading coefficient. Newton iteration on the unit part.
QSeries sqrt_unit_times_monomial(const QSeries& a);

/// Equality up to min(a.order, b.order); tags must match.
bool agree(const QSeries& a, const QSeries& b);
bool operator==(const QSeries& a, const QSeries& b);

/// First index < min(orders) where coefficients differ.
std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const Rational& c) { return scale(a, c); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }

/// prod_{r>=1} (1 - q^r) via the sparse pentagonal-number series.
QSeries euler_product(std::size_t order);

/// q * prod_{r>=1} (1 - q^r)^24.
QSeries eta24(std::size_t order);

std::string to_string(const QSeries& a);

}  // namespace eisen

#include "eisen/qseries.hpp"

#include <sstream>
#include <stdexcept>

#include "eisen/series.hpp"

namespace eisen {

namespace {

void require_same_var(const QSeries& a, const QSeries& b) {
    if (a.var() != b.var())
        throw std::invalid_argument("QSeries: variable tag mismatch (q vs w)");
}

std::size_t min_order(const QSeries& a, const QSeries& b) {
    return a.order() < b.order() ? a.order() : b.order();
}

}  // namespace

char var_symbol(Var v) { return v == Var::Q ? 'q' : 'w'; }

QSeries::QSeries(Var var, std::size_t order) : var_(var), c_(order) {
    if (order == 0) throw std::invalid_argument("QSeries: order must be positive");
}

QSeries::QSeries(Var var, std::vector<Rational> coeffs) : var_(var), c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("QSeries: order must be positive");
}

QSeries QSeries::one(Var var, std::size_t order) {
    QSeries s(var, order);
    s.c_[0] = Rational(1);
    return s;
}

QSeries QSeries::monomial(Var var, std::size_t order, const Rational& c, std::size_t k) {
    QSeries s(var, order);
    if (k < order) s.c_[k] = c;
    return s;
}

QSeries QSeries::from_longs(Var var, std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return QSeries(var, std::move(c));
}

const Rational& QSeries::coeff(std::size_t i) const {
    if (i >= c_.size()) throw std::out_of_range("QSeries: coefficient index beyond order");
    return c_[i];
}

Rational& QSeries::coeff_mut(std::size_t i) {
    if (i >= c_.size()) throw std::out_of_range("QSeries: coefficient index beyond order");
    return c_[i];
}

bool QSeries::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<std::size_t> QSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return i;
    return std::nullopt;
}

QSeries add(const QSeries& a, const QSeries& b) {
    require_same_var(a, b);
    const std::size_t n = min_order(a, b);
    QSeries out(a.var(), n);
    for (std::size_t i = 0; i < n; ++i) out.coeff_mut(i) = a.coeff(i) + b.coeff(i);
    return out;
}

QSeries sub(const QSeries& a, const QSeries& b) {
    require_same_var(a, b);
    const std::size_t n = min_order(a, b);
    QSeries out(a.var(), n);
    for (std::size_t i = 0; i < n; ++i) out.coeff_mut(i) = a.coeff(i) - b.coeff(i);
    return out;
}

QSeries mul(const QSeries& a, const QSeries& b) {
    require_same_var(a, b);
    const std::size_t n = min_order(a, b);
    return QSeries(a.var(), kernel::mul<Rational>(a.coeffs(), b.coeffs(), n));
}

QSeries neg(const QSeries& a) {
    QSeries out(a.var(), a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.coeff_mut(i) = -a.coeff(i);
    return out;
}

QSeries scale(const QSeries& a, const Rational& c) {
    QSeries out(a.var(), a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.coeff_mut(i) = a.coeff(i) * c;
    return out;
}

QSeries pow(const QSeries& a, unsigned long e) {
    return QSeries(a.var(), kernel::pow<Rational>(a.coeffs(), e, a.order(), Rational(1)));
}

QSeries invert(const QSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::invalid_argument("QSeries: cannot invert a series with zero constant term");
    const Rational inv0 = Rational(1) / a.coeff(0);
    return QSeries(a.var(), kernel::invert<Rational>(a.coeffs(), a.order(), inv0));
}

QSeries truncate(const QSeries& a, std::size_t order) {
    if (order == 0) throw std::invalid_argument("QSeries: order must be positive");
    if (order >= a.order()) return a;
    std::vector<Rational> c(a.coeffs().begin(), a.coeffs().begin() + order);
    return QSeries(a.var(), std::move(c));
}

QSeries shift_up(const QSeries& a, std::size_t k) {
    QSeries out(a.var(), a.order() + k);
    for (std::size_t i = 0; i < a.order(); ++i) out.coeff_mut(i + k) = a.coeff(i);
    return out;
}

QSeries shift_down(const QSeries& a, std::size_t k) {
    if (k >= a.order())
        throw std::invalid_argument("QSeries: shift_down by " + std::to_string(k) +
                                    " exceeds order " + std::to_string(a.order()));
    for (std::size_t i = 0; i < k; ++i) {
        if (!a.coeff(i).is_zero())
            throw std::invalid_argument(
                "QSeries: shift_down by " + std::to_string(k) +
                " hits nonzero coefficient at index " + std::to_string(i));
    }
    std::vector<Rational> c(a.coeffs().begin() + k, a.coeffs().end());
    return QSeries(a.var(), std::move(c));
}

QSeries inflate(const QSeries& a) {
    if (a.var() != Var::Q) throw std::invalid_argument("inflate: expected a q-series");
    QSeries out(Var::W, 2 * a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.coeff_mut(2 * i) = a.coeff(i);
    return out;
}

std::optional<std::size_t> first_odd_index(const QSeries& a) {
    for (std::size_t i = 1; i < a.order(); i += 2)
        if (!a.coeff(i).is_zero()) return i;
    return std::nullopt;
}

QSeries deflate(const QSeries& a) {
    if (a.var() != Var::W) throw std::invalid_argument("deflate: expected a w-series");
    if (auto bad = first_odd_index(a))
        throw std::invalid_argument("deflate: nonzero coefficient at odd index " +
                                    std::to_string(*bad));
    QSeries out(Var::Q, (a.order() + 1) / 2);
    for (std::size_t i = 0; 2 * i < a.order(); ++i) out.coeff_mut(i) = a.coeff(2 * i);
    return out;
}

QSeries substitute_square(const QSeries& a) {
    QSeries out(a.var(), 2 * a.order());
    for (std::size_t i = 0; i < a.order(); ++i) out.coeff_mut(2 * i) = a.coeff(i);
    return out;
}

QSeries sqrt_unit_times_monomial(const QSeries& a) {
    const auto val = a.valuation();
    if (!val) throw std::invalid_argument("series sqrt: zero series");
    if (*val % 2 != 0)
        throw std::invalid_argument("series sqrt: odd valuation " + std::to_string(*val));
    const std::size_t v = *val / 2;
    const auto lead = exact_sqrt(a.coeff(*val));
    if (!lead)
        throw std::invalid_argument("series sqrt: leading coefficient " + a.coeff(*val).str() +
                                    " is not the square of a rational");

    // Unit part u with u(0) = 1, then Newton for y = sqrt(u):
    // y <- (y + u/y)/2 doubles the number of correct coefficients.
    const QSeries u = scale(shift_down(a, 2 * v), Rational(1) / a.coeff(*val));
    const std::size_t target = u.order();
    std::vector<Rational> y{Rational(1)};
    std::size_t good = 1;
    const Rational half(1, 2);
    while (good < target) {
        const std::size_t next = good * 2 < target ? good * 2 : target;
        y.resize(next);  // exact polynomial, zero-padded; Newton corrects the tail
        QSeries yk(u.var(), y);
        QSeries lifted = scale(add(yk, mul(truncate(u, next), invert(yk))), half);
        y.assign(lifted.coeffs().begin(), lifted.coeffs().end());
        good = next;
    }
    return shift_up(scale(QSeries(u.var(), std::move(y)), *lead), v);
}

bool agree(const QSeries& a, const QSeries& b) { return !first_difference(a, b).has_value(); }

bool operator==(const QSeries& a, const QSeries& b) { return agree(a, b); }

std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
    require_same_var(a, b);
    const std::size_t n = min_order(a, b);
    for (std::size_t i = 0; i < n; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return i;
    return std::nullopt;
}

QSeries euler_product(std::size_t order) {
    QSeries out = QSeries::one(Var::Q, order);
    for (unsigned long k = 1;; ++k) {
        const unsigned long g1 = k * (3 * k - 1) / 2;
        const unsigned long g2 = k * (3 * k + 1) / 2;
        if (g1 >= order) break;
        const Rational sign(k % 2 == 1 ? -1 : 1);
        out.coeff_mut(g1) += sign;
        if (g2 < order) out.coeff_mut(g2) += sign;
    }
    return out;
}

QSeries eta24(std::size_t order) {
    return truncate(shift_up(pow(euler_product(order), 24), 1), order);
}

std::string to_string(const QSeries& a) {
    std::ostringstream os;
    const char x = var_symbol(a.var());
    bool first = true;
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        if (!first) os << " + ";
        os << a.coeff(i).str();
        if (i > 0) os << "*" << x << "^" << i;
        first = false;
    }
    if (first) os << "0";
    os << " + O(" << x << "^" << a.order() << ")";
    return os.str();
}

}  // namespace eisen

#include "eisen/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eisen {

namespace {

void require_nonzero_den(const Int& den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational::Rational(const Int& num, const Int& den) {
    require_nonzero_den(den);
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    Int num, den;
    const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
    if (num_part.empty() || mpz_set_str(num.get_mpz_t(), num_part.c_str(), 10) != 0)
        throw std::invalid_argument("Rational: cannot parse numerator in '" + s + "'");
    if (slash == std::string::npos) {
        den = 1;
    } else {
        const std::string den_part = s.substr(slash + 1);
        if (den_part.empty() || mpz_set_str(den.get_mpz_t(), den_part.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse denominator in '" + s + "'");
    }
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), v_.get_mpq_t());
    return r;
}

void Rational::add_mul(const Rational& a, const Rational& b) {
    static thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), scratch.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned long e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(n, d);
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(x.num().get_mpz_t()) || !mpz_perfect_square_p(x.den().get_mpz_t()))
        return std::nullopt;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), x.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), x.den().get_mpz_t());
    return Rational(n, d);
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int int_pow(long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
    if (base < 0 && e % 2 == 1) mpz_neg(r.get_mpz_t(), r.get_mpz_t());
    return r;
}

}  // namespace eisen

#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// A commutative coefficient ring usable by the dense series kernels.
/// A default-constructed value must be the additive identity.
template <typename R>
concept SeriesRing = std::default_initializable<R> && std::copyable<R> &&
    requires(R a, const R& b) {
        { a += b };
        { a -= b };
        { b* b } -> std::convertible_to<R>;
        { -b } -> std::convertible_to<R>;
        { b.is_zero() } -> std::convertible_to<bool>;
    };

/// acc += a*b. Rings with a cheaper fused form overload this.
template <SeriesRing R>
inline void acc_mul(R& acc, const R& a, const R& b) {
    acc += a * b;
}

inline void acc_mul(Rational& acc, const Rational& a, const Rational& b) { acc.add_mul(a, b); }

namespace kernel {

/// Coefficients 0..n-1 of the Cauchy product a*b.
template <SeriesRing R>
std::vector<R> mul(std::span<const R> a, std::span<const R> b, std::size_t n) {
    std::vector<R> out(n);
    const std::size_t ia_end = a.size() < n ? a.size() : n;
    for (std::size_t i = 0; i < ia_end; ++i) {
        if (a[i].is_zero()) continue;
        const std::size_t jb_end = b.size() < n - i ? b.size() : n - i;
        for (std::size_t j = 0; j < jb_end; ++j) {
            if (b[j].is_zero()) continue;
            acc_mul(out[i + j], a[i], b[j]);
        }
    }
    return out;
}

/// a^e truncated to n coefficients, by repeated squaring.
template <SeriesRing R>
std::vector<R> pow(std::span<const R> a, unsigned long e, std::size_t n, const R& one) {
    std::vector<R> result(n);
    if (n == 0) return result;
    result[0] = one;
    if (e == 0) return result;
    std::vector<R> base(a.begin(), a.begin() + (a.size() < n ? a.size() : n));
    base.resize(n);
    for (;;) {
        if (e & 1) result = mul<R>(result, base, n);
        e >>= 1;
        if (e == 0) break;
        base = mul<R>(base, base, n);
    }
    return result;
}

/// b with a*b = 1 + O(x^n). inv0 must be the inverse of a[0].
template <SeriesRing R>
std::vector<R> invert(std::span<const R> a, std::size_t n, const R& inv0) {
    std::vector<R> b(n);
    if (n == 0) return b;
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        R s{};
        const std::size_t i_end = a.size() - 1 < k ? a.size() - 1 : k;
        for (std::size_t i = 1; i <= i_end; ++i) {
            if (!a[i].is_zero()) acc_mul(s, a[i], b[k - i]);
        }
        if (!s.is_zero()) b[k] = -(inv0 * s);
    }
    return b;
}

}  // namespace kernel

}  // namespace eisen

#pragma once

#include <cstddef>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// n-th Bernoulli number for the convention t/(e^t - 1) = sum B_n t^n / n!
/// (so B_1 = -1/2). Memoized behind a lock; safe to call concurrently.
Rational bernoulli(unsigned n);

/// Sum of the k-th powers of the divisors of n (n >= 1). Memoized.
Int sigma(unsigned k, unsigned long n);

/// sigma_k(m) for all m < count via a divisor sieve; index 0 holds 0.
std::vector<Int> sigma_table(unsigned k, std::size_t count);

}  // namespace eisen

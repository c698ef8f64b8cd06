#include "eisen/arith.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace eisen {

Rational bernoulli(unsigned n) {
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= n) {
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        const unsigned long m = cache.size();
        Rational s;
        for (unsigned long j = 0; j < m; ++j) {
            if (!cache[j].is_zero()) s.add_mul(Rational(binomial(m + 1, j)), cache[j]);
        }
        cache.push_back(-(s / Rational(static_cast<long>(m) + 1)));
    }
    return cache[n];
}

Int sigma(unsigned k, unsigned long n) {
    if (n == 0) throw std::invalid_argument("sigma: n must be positive");
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned long>, Int> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, n});
    if (it != cache.end()) return it->second;

    Int total = 0, p;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        total += p;
        const unsigned long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), e, k);
            total += p;
        }
    }
    cache.emplace(std::make_pair(k, n), total);
    return total;
}

std::vector<Int> sigma_table(unsigned k, std::size_t count) {
    std::vector<Int> table(count, Int(0));
    Int p;
    for (std::size_t d = 1; d < count; ++d) {
        mpz_ui_pow_ui(p.get_mpz_t(), d, k);
        for (std::size_t m = d; m < count; m += d) table[m] += p;
    }
    return table;
}

}  // namespace eisen

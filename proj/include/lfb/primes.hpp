// primes.hpp -- sieve utilities and prime-power iteration.
//
// Prime enumeration is done per 64K segment in increasing order; every sum
// built on top of these loops accumulates in that fixed order, so results do
// not depend on how work is scheduled.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace lfb {

// Primes <= limit, increasing.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

// Smallest-prime-factor table: spf[n] is the least prime dividing n (spf[1]=1).
inline std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(limit + 1, 0);
    if (limit >= 1) spf[1] = 1;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i)
                if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

// Segmented visit of all primes in [2, limit], ascending.  fn(p).
inline void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
    if (limit < 2) return;
    const std::uint64_t seg = 1u << 16;
    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) <= limit) ++root;
    auto base = primes_up_to(root);
    std::vector<bool> mark;
    for (std::uint64_t lo = 2; lo <= limit; lo += seg) {
        std::uint64_t hi = std::min(limit, lo + seg - 1);
        mark.assign(hi - lo + 1, false);
        for (auto p : base) {
            if (p * p > hi) break;
            std::uint64_t first = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = first; j <= hi; j += p) mark[j - lo] = true;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!mark[n - lo] && n >= 2) fn(n);
    }
}

// Visit all prime powers p^k <= limit as (p, k, p^k), ordered by p then k.
inline void for_each_prime_power(std::uint64_t limit,
                                 const std::function<void(std::uint64_t, unsigned, std::uint64_t)>& fn) {
    for_each_prime(limit, [&](std::uint64_t p) {
        std::uint64_t pk = p;
        unsigned k = 1;
        while (true) {
            fn(p, k, pk);
            if (pk > limit / p) break;
            pk *= p;
            ++k;
        }
    });
}

inline std::uint64_t count_prime_powers(std::uint64_t limit) {
    std::uint64_t c = 0;
    for_each_prime_power(limit, [&](std::uint64_t, unsigned, std::uint64_t) { ++c; });
    return c;
}

}  // namespace lfb

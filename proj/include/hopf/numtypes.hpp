#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <vector>

namespace hopf {

// Exact arithmetic baseline: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline long mod_reduce(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

inline bool is_square_free(long n) {
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
        while (n % p == 0) n /= p;
    }
    return true;
}

}  // namespace hopf

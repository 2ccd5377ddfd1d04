#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace slicesieve {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_prime(long n) {
    if (n < 2) return false;
    mpz_class z = n;
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

// Multiplicative order of base modulo p (p prime, p coprime to base).
inline long mod_order(long base, long p) {
    long x = ((base % p) + p) % p;
    if (x == 0) return 0;
    long acc = 1;
    for (long ord = 1; ord <= p; ++ord) {
        acc = (acc * x) % p;
        if (acc == 1) return ord;
    }
    return 0;
}

inline bool is_primitive_root(long base, long p) {
    return is_prime(p) && mod_order(base, p) == p - 1;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::optional<Integer> integer_sqrt_exact(const Integer& v) {
    if (v < 0) return std::nullopt;
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

}  // namespace slicesieve

#include "csl/primes.hpp"

#include <gmp.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace csl {

std::vector<u64> sieve_primes(u64 n) {
    std::vector<u64> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (u64 i = 2; i * i <= n; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= n; j += i) comp[j] = true;
    for (u64 i = 2; i <= n; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

std::vector<bool> sieve_segment(u64 lo, u64 hi) {
    if (lo < 2 || hi < lo) throw std::invalid_argument("sieve_segment: bad range");
    std::vector<bool> prime(hi - lo, true);
    u64 root = u64(std::sqrt(double(hi))) + 2;
    for (u64 p : sieve_primes(root)) {
        u64 start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (u64 j = start; j < hi; j += p) prime[j - lo] = false;
    }
    return prime;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 modinv_u64(u64 a, u64 m) {
    i128 t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        i128 q = r / nr;
        i128 tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::domain_error("modinv: not invertible");
    if (t < 0) t += m;
    return u64(t);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // First 12 primes: deterministic far beyond 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

PrimalityResult is_prime_i128(i128 n) {
    if (n < 2) return {false, false};
    if (n <= i128(std::numeric_limits<u64>::max())) return {is_prime_u64(u64(n)), false};
    mpz_t z;
    mpz_init(z);
    u128 u = u128(n);
    mpz_set_ui(z, u64(u >> 64));
    mpz_mul_2exp(z, z, 64);
    mpz_add_ui(z, z, u64(u));
    int r = mpz_probab_prime_p(z, 32);
    mpz_clear(z);
    return {r > 0, true};
}

std::vector<std::pair<u64, u32>> factorize_u64(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: zero");
    std::vector<std::pair<u64, u32>> out;
    for (u64 p = 2; p * p <= n && p < (1u << 21); p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            u32 e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (!is_prime_u64(n)) throw std::invalid_argument("factorize_u64: budget exceeded");
        out.emplace_back(n, 1);
    }
    return out;
}

}  // namespace csl

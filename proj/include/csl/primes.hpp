#pragma once

#include <cstdint>
#include <vector>

#include "csl/checked.hpp"

namespace csl {

/// Simple sieve of Eratosthenes; returns all primes <= n.
std::vector<u64> sieve_primes(u64 n);

/// Prime flags for the half-open segment [lo, hi) using base primes up to
/// sqrt(hi). lo must be >= 2.
std::vector<bool> sieve_segment(u64 lo, u64 hi);

/// Deterministic Miller-Rabin for n < 2^64 (12-prime base set).
bool is_prime_u64(u64 n);

struct PrimalityResult {
    bool prime;
    bool probabilistic;  // true when n >= 2^64 and a BPSW-style test was used
};

/// Primality for checked 128-bit values. Below 2^64 this is deterministic;
/// above it falls back to GMP's strong probable-prime test and flags the
/// result as probabilistic.
PrimalityResult is_prime_i128(i128 n);

/// Trial-division factorization of n (u64) into (prime, exponent) pairs,
/// ordered by prime. Throws std::invalid_argument for n == 0.
std::vector<std::pair<u64, u32>> factorize_u64(u64 n);

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 base, u64 exp, u64 m);
u64 modinv_u64(u64 a, u64 m);

}  // namespace csl

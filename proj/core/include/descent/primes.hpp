#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "descent/rat.hpp"

namespace descent {

/// All primes <= bound, ascending, by sieve of Eratosthenes.
std::vector<uint32_t> primes_up_to(uint32_t bound);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(uint64_t n);

/// Primality for arbitrary positive integers: deterministic below 2^64,
/// GMP's Baillie-PSW based test above.
bool is_prime(const BigInt& n);

/// Factorization of n >= 1 into (prime, exponent) pairs, primes ascending.
/// Trial division up to 10^6, then Pollard rho with Brent cycling.
std::vector<std::pair<BigInt, unsigned>> int_factor(const BigInt& n);

/// Factorization of a word-sized integer, same contract.
std::vector<std::pair<uint64_t, unsigned>> factor_u64(uint64_t n);

/// Distinct prime divisors of |n|, ascending; n must be nonzero.
std::vector<BigInt> prime_support(const BigInt& n);

} // namespace descent

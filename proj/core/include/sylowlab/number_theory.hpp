#ifndef SYLOWLAB_NUMBER_THEORY_HPP_
#define SYLOWLAB_NUMBER_THEORY_HPP_

#include <cstdint>
#include <vector>

#include "sylowlab/ratio.hpp"

namespace sylowlab {

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(const BigInt& n);

// Largest power of p dividing n.
BigInt p_part(const BigInt& n, std::uint64_t p);

bool is_power_of(std::uint64_t n, std::uint64_t p);

// True iff every prime divisor of n lies in primes (n = 1 qualifies).
bool is_pi_number(std::uint64_t n, const std::vector<std::uint64_t>& primes);

// p = 2^k - 1 prime.
bool is_mersenne_prime(std::uint64_t p);

}  // namespace sylowlab

#endif  // SYLOWLAB_NUMBER_THEORY_HPP_

#include "sylowlab/number_theory.hpp"

#include <algorithm>

namespace sylowlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(const BigInt& n) {
  std::vector<std::uint64_t> out;
  BigInt m = n;
  for (std::uint64_t d = 2; BigInt(d) * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<std::uint64_t>(m));
  return out;
}

BigInt p_part(const BigInt& n, std::uint64_t p) {
  BigInt part = 1;
  BigInt m = n;
  while (m != 0 && m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_pi_number(std::uint64_t n,
                  const std::vector<std::uint64_t>& primes) {
  if (n == 0) return false;
  for (std::uint64_t p : primes) {
    if (p < 2) continue;
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

bool is_mersenne_prime(std::uint64_t p) {
  return is_prime(p) && is_power_of(p + 1, 2);
}

}  // namespace sylowlab

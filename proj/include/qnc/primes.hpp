#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qnc {

inline constexpr std::size_t kDefaultMaxN = 100000;

// Dimension cap for prime tables and matrices. QNC_MAX_N overrides the
// default when set to a positive integer.
std::size_t dimension_cap();

struct PrimeTable {
  std::vector<long> primes;  // ascending, primes[0] == 2
  long limit = 0;            // every prime <= limit is present

  std::size_t size() const noexcept { return primes.size(); }
  long operator[](std::size_t i) const { return primes[i]; }
};

// All primes <= limit (sieve of Eratosthenes).
PrimeTable primes_up_to(long limit);

// The first n primes. Throws ResourceError when n exceeds `cap`.
PrimeTable first_primes(std::size_t n, std::size_t cap = dimension_cap());

// Deterministic trial division.
bool is_prime(long value);

}  // namespace qnc

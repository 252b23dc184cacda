#include "qnc/primes.hpp"

#include <cerrno>
#include <cstdlib>
#include <string>

#include "qnc/errors.hpp"

namespace qnc {

std::size_t dimension_cap() {
  const char* env = std::getenv("QNC_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxN;
  char* end = nullptr;
  errno = 0;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || value == 0) {
    throw ResourceError(std::string("QNC_MAX_N is not a positive integer: '") + env + "'");
  }
  return static_cast<std::size_t>(value);
}

PrimeTable primes_up_to(long limit) {
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (long j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (long i = 2; i <= limit; ++i) {
    if (!composite[i]) table.primes.push_back(i);
  }
  return table;
}

PrimeTable first_primes(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("requested " + std::to_string(n) + " primes, cap is " +
                        std::to_string(cap));
  }
  long limit = 16;
  PrimeTable table = primes_up_to(limit);
  while (table.size() < n) {
    limit *= 2;
    table = primes_up_to(limit);
  }
  table.primes.resize(n);
  // The truncated table still contains every prime up to its last element.
  table.limit = n == 0 ? 1 : table.primes.back();
  return table;
}

bool is_prime(long value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (long d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

}  // namespace qnc

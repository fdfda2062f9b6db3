#include "heckecert/modarith.hpp"

#include <mutex>

#include "heckecert/error.hpp"

namespace heckecert::modarith {

u64 pow(u64 base, u64 exponent, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exponent >>= 1U;
  }
  return result;
}

u64 inverse(u64 a, u64 p) {
  a %= p;
  require(a != 0, ErrorKind::Internal, "inverse of zero modulo " + std::to_string(p));
  return pow(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s && composite; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> small_primes(std::size_t count) {
  std::vector<u64> primes;
  primes.reserve(count);
  for (u64 n = 2; primes.size() < count; ++n)
    if (is_prime(n)) primes.push_back(n);
  return primes;
}

std::vector<u64> crt_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace heckecert::modarith

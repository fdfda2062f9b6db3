#pragma once

#include <cstdint>
#include <vector>

namespace heckecert::modarith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return (s >= p || s < a) ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }

u64 pow(u64 base, u64 exponent, u64 p);
/// Inverse of a modulo prime p; a must be nonzero mod p.
u64 inverse(u64 a, u64 p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);

/// The first `count` primes 2, 3, 5, ...
std::vector<u64> small_primes(std::size_t count);

/// The first `count` primes strictly below 2^62, in decreasing order. The list is a
/// fixed function of `count`, so every run uses the same moduli.
std::vector<u64> crt_primes(std::size_t count);

}  // namespace heckecert::modarith

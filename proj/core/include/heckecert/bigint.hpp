#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace heckecert {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Parses a signed decimal integer; throws Error(InvalidInput) on malformed text.
BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);
BigInt binomial(unsigned long n, unsigned long k);

/// Floor of the square root; requires value >= 0.
BigInt isqrt(const BigInt& value);

/// Number of bits of |value| (0 for 0).
std::size_t bit_length(const BigInt& value);

/// Residue in [0, m) of value modulo the word-size modulus m.
std::uint64_t mod_u64(const BigInt& value, std::uint64_t m);

inline int sign(const BigInt& value) { return sgn(value); }
inline int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

BigInt gcd(const BigInt& a, const BigInt& b);

std::int64_t to_int64(const BigInt& value);

}  // namespace heckecert

#include "heckecert/bigint.hpp"

#include <limits>

#include "heckecert/error.hpp"

namespace heckecert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::InsufficientPrecision: return "insufficient precision";
    case ErrorKind::BadPrime: return "bad prime";
    case ErrorKind::NotSquarefree: return "not squarefree";
    case ErrorKind::NotFound: return "not found";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::NeedsLargerTruncation: return "needs larger truncation";
    case ErrorKind::NoConvergence: return "no convergence";
    case ErrorKind::Internal: return "internal consistency error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) { return value.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool digits = s.size() > start;
  for (std::size_t i = start; i < s.size() && digits; ++i) digits = s[i] >= '0' && s[i] <= '9';
  require(digits, ErrorKind::InvalidInput, "not a decimal integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  require(den != 0, ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt isqrt(const BigInt& value) {
  require(value >= 0, ErrorKind::Domain, "isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

std::uint64_t mod_u64(const BigInt& value, std::uint64_t m) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(value.get_mpz_t(), m);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::int64_t to_int64(const BigInt& value) {
  require(mpz_fits_slong_p(value.get_mpz_t()) != 0, ErrorKind::InvalidInput,
          "integer does not fit in 64 bits: " + to_string(value));
  return value.get_si();
}

}  // namespace heckecert

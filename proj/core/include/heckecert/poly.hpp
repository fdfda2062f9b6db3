#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heckecert/bigint.hpp"

namespace heckecert {

/// Dense univariate polynomial over Z, lowest degree first. The zero polynomial
/// has no coefficients and degree -1; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(std::size_t degree, const BigInt& coeff = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of X^i (zero beyond the degree).
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;

  IntPoly derivative() const;
  BigInt evaluate(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(const BigInt& scalar, const IntPoly& p);

  bool operator==(const IntPoly& rhs) const = default;

  /// Human-readable form, highest degree first: "X^2 - 1080*X - 20468736".
  std::string to_string(std::string_view var = "X") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Dense polynomial over Q with coefficients kept in lowest terms.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& p);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const;

  RatPoly& operator+=(const RatPoly& rhs);
  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator*(const Rational& scalar, const RatPoly& p);

  bool operator==(const RatPoly& rhs) const = default;
  std::string to_string(std::string_view var = "X") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace heckecert

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "heckecert/bigint.hpp"

namespace heckecert {

/// Truncated q-expansion sum_{n<=prec} a(n) q^n with exact integer coefficients.
///
/// Precision is explicit: binary operations produce min(lhs.prec(), rhs.prec())
/// and nothing is ever zero-padded.
class QSeries {
 public:
  /// coeffs[n] is the coefficient of q^n; must be non-empty (prec = size - 1).
  explicit QSeries(std::vector<BigInt> coeffs);

  static QSeries zero(std::size_t prec);
  static QSeries one(std::size_t prec);
  /// q^shift + O(q^{prec+1}); shift > prec yields the zero series.
  static QSeries monomial(std::size_t shift, std::size_t prec);

  std::size_t prec() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }
  /// Bounds-checked access; throws InsufficientPrecision past prec().
  const BigInt& at(std::size_t n) const;

  /// Index of the first nonzero coefficient, or prec() + 1 for the zero series.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() > prec(); }

  QSeries truncate(std::size_t prec) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const BigInt& scalar);

  /// Divides every coefficient by `divisor`; throws Internal if any division is inexact.
  QSeries exact_divide(const BigInt& divisor) const;

  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(QSeries lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend QSeries operator-(QSeries s);
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);

  bool operator==(const QSeries& rhs) const = default;

  /// e.g. "q - 24*q^2 + O(q^3)"
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Reference O(prec^2) product.
QSeries multiply_schoolbook(const QSeries& lhs, const QSeries& rhs);
/// Product through a single big-integer multiplication (Kronecker substitution);
/// bit-identical to multiply_schoolbook.
QSeries multiply_kronecker(const QSeries& lhs, const QSeries& rhs);

QSeries pow(const QSeries& base, unsigned exponent);

/// dim S_w(SL(2,Z)); throws InvalidInput for odd or negative w.
std::size_t dim_cusp(int w);

/// Normalised E_4 (1 + 240 sum sigma_3(n) q^n) or E_6 (1 - 504 sum sigma_5(n) q^n).
QSeries eisenstein(int w, std::size_t prec);

/// Delta = (E_4^3 - E_6^2) / 1728 = q - 24 q^2 + ...
QSeries delta(std::size_t prec);

/// Echelonised integral basis f_1..f_d of S_w with f_i = q^i + O(q^{d+1}).
/// Requires prec >= d; throws InsufficientPrecision otherwise.
std::vector<QSeries> miller_basis(int w, std::size_t prec);

}  // namespace heckecert

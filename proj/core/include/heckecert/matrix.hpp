#pragma once

#include <cstddef>
#include <vector>

#include "heckecert/bigint.hpp"

namespace heckecert {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  BigInt trace() const;
  /// Largest |entry| (0 for the empty matrix).
  BigInt max_abs() const;

  friend IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs);
  friend IntMatrix operator*(const BigInt& scalar, const IntMatrix& m);

  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

}  // namespace heckecert

#include "heckecert/matrix.hpp"

#include "heckecert/error.hpp"

namespace heckecert {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require(row.size() == cols_, ErrorKind::InvalidInput, "ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  require(is_square(), ErrorKind::InvalidInput, "trace of a non-square matrix");
  BigInt t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

BigInt IntMatrix::max_abs() const {
  BigInt m = 0;
  for (const auto& x : data_)
    if (cmpabs(x, m) > 0) m = abs(x);
  return m;
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  require(lhs.cols_ == rhs.rows_, ErrorKind::InvalidInput, "matrix shapes do not compose");
  IntMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i)
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const BigInt& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), rhs(k, j).get_mpz_t());
    }
  return out;
}

IntMatrix operator+(const IntMatrix& lhs, const IntMatrix& rhs) {
  require(lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_, ErrorKind::InvalidInput, "shape mismatch");
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& lhs, const IntMatrix& rhs) {
  require(lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_, ErrorKind::InvalidInput, "shape mismatch");
  IntMatrix out = lhs;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix operator*(const BigInt& scalar, const IntMatrix& m) {
  IntMatrix out = m;
  for (auto& x : out.data_) x *= scalar;
  return out;
}

}  // namespace heckecert

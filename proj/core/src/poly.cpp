#include "heckecert/poly.hpp"

#include <sstream>

#include "heckecert/error.hpp"

namespace heckecert {

namespace {

template <class Coeff>
void append_term(std::ostringstream& os, const Coeff& c, std::size_t degree, std::string_view var, bool first) {
  const bool negative = c < 0;
  Coeff mag = negative ? Coeff(-c) : c;
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
  if (degree == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << "*";
  os << var;
  if (degree > 1) os << "^" << degree;
}

template <class Coeff>
std::string format_poly(std::span<const Coeff> coeffs, std::string_view var) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    append_term(os, coeffs[i], i, var, first);
    first = false;
  }
  return os.str();
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(std::size_t degree, const BigInt& coeff) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coeff;
  return IntPoly(std::move(c));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPoly::leading() const {
  require(!coeffs_.empty(), ErrorKind::InvalidInput, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& scalar, const IntPoly& p) {
  std::vector<BigInt> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& c : out) c *= scalar;
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string(std::string_view var) const { return format_poly<BigInt>(coeffs_, var); }

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  IntPoly square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const Rational& scalar, const RatPoly& p) {
  std::vector<Rational> out(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& c : out) c *= scalar;
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(std::string_view var) const { return format_poly<Rational>(coeffs_, var); }

}  // namespace heckecert

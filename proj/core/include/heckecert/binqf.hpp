#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heckecert/bigint.hpp"

namespace heckecert {

/// Binary quadratic form a x^2 + b x y + c y^2.
struct Form {
  BigInt a, b, c;

  BigInt discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  BigInt evaluate(const BigInt& x, const BigInt& y) const { return a * x * x + b * x * y + c * y * y; }
  std::string to_string() const;  // "[a, b, c]"

  bool operator==(const Form& rhs) const { return a == rhs.a && b == rhs.b && c == rhs.c; }
  std::strong_ordering operator<=>(const Form& rhs) const;
};

Form make_form(long a, long b, long c);

/// value = 0 or 1 mod 4 and nonzero.
bool is_discriminant(const BigInt& value);
/// 1 counts as fundamental.
bool is_fundamental_discriminant(const BigInt& value);

/// Kronecker symbol (a/n) with (a/-1) = -1 iff a < 0 and (a/0) = 1 iff |a| = 1.
int kronecker(const BigInt& a, const BigInt& n);
int kronecker(std::int64_t a, std::int64_t n);

/// All [a, b, c] with b^2 - 4ac = delta and a < 0 < c, ordered by (a, b).
/// Throws InvalidInput unless delta > 0 and delta = 0, 1 mod 4.
std::vector<Form> enumerate_straddling(const BigInt& delta);

/// The explicit straddling lists printed for discriminants 5, 12, 21, 33, 40, 65,
/// in the same (a, b) order; empty optional for any other discriminant.
std::optional<std::vector<Form>> published_straddling_list(long delta);

struct RepresentedValue {
  BigInt value;
  long x = 0;
  long y = 0;
};

inline constexpr long kDefaultSearchBox = 50;

/// First Q(x, y) coprime to d, scanning shells max(|x|,|y|) = 1, 2, ... and
/// inside a shell x, then y, in the order 0, 1, -1, 2, -2, ...
/// Throws Precondition if gcd(a, b, c, d) > 1, NotFound past the box.
RepresentedValue represented_value_coprime(const Form& q, const BigInt& d, long box = kDefaultSearchBox);

/// chi_d(Q) = (d / r) for r represented by Q and prime to d; 0 when gcd(a, b, c, d) > 1.
/// Requires d fundamental with disc(Q) = d * (a discriminant).
int genus_char(const BigInt& d, const Form& q, long box = kDefaultSearchBox);

/// Reduced indefinite forms: 0 < b < sqrt(delta), sqrt(delta) - b < 2|a| < sqrt(delta) + b.
std::vector<Form> reduced_forms(const BigInt& delta);
/// The reduction operator [a, b, c] -> [c, b', (b'^2 - delta) / 4c].
Form rho(const Form& q);

/// Reduced forms partitioned into rho-cycles; each cycle starts at its least form.
/// Throws Unsupported for square delta, InvalidInput for delta <= 0 or not 0, 1 mod 4.
std::vector<std::vector<Form>> reduction_cycles(const BigInt& delta);

}  // namespace heckecert

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heckecert/poly.hpp"

namespace heckecert {

/// Polynomial over F_p, residues in [0, p), lowest degree first, no trailing zeros.
struct ModPoly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> coeffs;

  ModPoly() = default;
  ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> c);

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const noexcept { return coeffs.empty(); }
  std::uint64_t leading() const { return coeffs.back(); }
  std::string to_string() const;

  bool operator==(const ModPoly&) const = default;
};

/// Coefficientwise reduction; throws BadPrime when p divides the leading coefficient.
ModPoly reduce_mod(const IntPoly& f, std::uint64_t p);

namespace modpoly {

ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
/// Remainder of a modulo the nonzero polynomial b.
ModPoly rem(const ModPoly& a, const ModPoly& b);
/// Quotient of an exact division; throws Internal if b does not divide a.
ModPoly divide_exact(const ModPoly& a, const ModPoly& b);
ModPoly derivative(const ModPoly& a);
ModPoly make_monic(const ModPoly& a);
/// Monic gcd (zero only when both inputs are zero).
ModPoly gcd(ModPoly a, ModPoly b);
/// base^e mod m by square-and-multiply.
ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m);

}  // namespace modpoly

/// Cycle type of Frobenius read off a squarefree reduction.
struct FactorPattern {
  std::uint64_t p = 0;
  std::vector<unsigned> degrees;  // ascending
  bool squarefree = false;

  bool operator==(const FactorPattern&) const = default;
};

/// Squarefree test via gcd(g, g') then distinct-degree factorisation. Non-squarefree
/// input gives squarefree = false and no degrees.
FactorPattern degree_pattern(const ModPoly& g);

}  // namespace heckecert

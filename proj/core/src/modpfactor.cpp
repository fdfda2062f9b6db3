#include "heckecert/modpfactor.hpp"

#include <algorithm>
#include <sstream>

#include "heckecert/error.hpp"
#include "heckecert/modarith.hpp"

namespace heckecert {

namespace ma = modarith;

namespace {

void trim(std::vector<ma::u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

ModPoly make(ma::u64 p, std::vector<ma::u64> c) {
  trim(c);
  ModPoly out;
  out.p = p;
  out.coeffs = std::move(c);
  return out;
}

// Returns quotient and overwrites `a` with the remainder.
std::vector<ma::u64> divmod_in_place(std::vector<ma::u64>& a, const ModPoly& b) {
  const ma::u64 p = b.p;
  const std::size_t db = b.coeffs.size() - 1;
  if (a.size() <= db) return {};
  const ma::u64 inv = ma::inverse(b.leading(), p);
  std::vector<ma::u64> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const ma::u64 factor = ma::mul(a[i], inv, p);
    q[i - db] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = ma::sub(a[i - db + j], ma::mul(factor, b.coeffs[j], p), p);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return q;
}

}  // namespace

ModPoly::ModPoly(std::uint64_t modulus, std::vector<std::uint64_t> c) : p(modulus), coeffs(std::move(c)) {
  for (auto& x : coeffs) x %= p;
  trim(coeffs);
}

std::string ModPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs[i] != 1) os << coeffs[i];
    if (i > 0 && coeffs[i] != 1) os << "*";
    if (i > 0) os << "X";
    if (i > 1) os << "^" << i;
  }
  os << " (mod " << p << ")";
  return os.str();
}

ModPoly reduce_mod(const IntPoly& f, std::uint64_t p) {
  require(p >= 2, ErrorKind::InvalidInput, "modulus must be a prime");
  require(!f.is_zero() && mod_u64(f.leading(), p) != 0, ErrorKind::BadPrime,
          std::to_string(p) + " divides the leading coefficient of " + f.to_string());
  std::vector<ma::u64> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(mod_u64(x, p));
  return make(p, std::move(c));
}

namespace modpoly {

ModPoly sub(const ModPoly& a, const ModPoly& b) {
  std::vector<ma::u64> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = ma::sub(c[i], b.coeffs[i], a.p);
  return make(a.p, std::move(c));
}

ModPoly mul(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return make(a.p, {});
  const ma::u64 p = a.p;
  std::vector<ma::u128> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  std::vector<ma::u64> out(acc.size());
  // Products are < 2^124; reduce the accumulator before it can overflow.
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      ma::u128& slot = acc[i + j];
      slot += static_cast<ma::u128>(a.coeffs[i]) * b.coeffs[j];
      if (slot >> 125) slot %= p;
    }
  }
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<ma::u64>(acc[k] % p);
  return make(p, std::move(out));
}

ModPoly rem(const ModPoly& a, const ModPoly& b) {
  require(!b.is_zero(), ErrorKind::InvalidInput, "division by the zero polynomial");
  std::vector<ma::u64> r = a.coeffs;
  divmod_in_place(r, b);
  return make(a.p, std::move(r));
}

ModPoly divide_exact(const ModPoly& a, const ModPoly& b) {
  require(!b.is_zero(), ErrorKind::InvalidInput, "division by the zero polynomial");
  std::vector<ma::u64> r = a.coeffs;
  auto q = divmod_in_place(r, b);
  require(r.empty(), ErrorKind::Internal, "inexact polynomial division mod " + std::to_string(a.p));
  return make(a.p, std::move(q));
}

ModPoly derivative(const ModPoly& a) {
  if (a.coeffs.size() <= 1) return make(a.p, {});
  std::vector<ma::u64> d(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) d[i - 1] = ma::mul(a.coeffs[i], i % a.p, a.p);
  return make(a.p, std::move(d));
}

ModPoly make_monic(const ModPoly& a) {
  if (a.is_zero()) return a;
  const ma::u64 inv = ma::inverse(a.leading(), a.p);
  std::vector<ma::u64> c = a.coeffs;
  for (auto& x : c) x = ma::mul(x, inv, a.p);
  return make(a.p, std::move(c));
}

ModPoly gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

ModPoly powmod(const ModPoly& base, std::uint64_t e, const ModPoly& m) {
  ModPoly result = rem(make(m.p, {1}), m);
  ModPoly square = rem(base, m);
  while (e > 0) {
    if (e & 1U) result = rem(mul(result, square), m);
    e >>= 1U;
    if (e > 0) square = rem(mul(square, square), m);
  }
  return result;
}

}  // namespace modpoly

FactorPattern degree_pattern(const ModPoly& g) {
  FactorPattern pattern;
  pattern.p = g.p;
  require(!g.is_zero(), ErrorKind::InvalidInput, "degree pattern of the zero polynomial");
  if (g.degree() == 0) {
    pattern.squarefree = true;
    return pattern;
  }
  ModPoly f = modpoly::make_monic(g);
  if (modpoly::gcd(f, modpoly::derivative(f)).degree() > 0) return pattern;
  pattern.squarefree = true;

  const ModPoly x = make(g.p, {0, 1});
  ModPoly h = modpoly::rem(x, f);
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    h = modpoly::powmod(h, g.p, f);  // x^{p^i} mod f
    const ModPoly factor = modpoly::gcd(f, modpoly::sub(h, x));
    if (factor.degree() > 0) {
      for (int k = 0; k < factor.degree() / static_cast<int>(i); ++k) pattern.degrees.push_back(i);
      f = modpoly::divide_exact(f, factor);
      h = modpoly::rem(h, f);
    }
  }
  if (f.degree() > 0) pattern.degrees.push_back(static_cast<unsigned>(f.degree()));
  std::sort(pattern.degrees.begin(), pattern.degrees.end());
  return pattern;
}

}  // namespace heckecert

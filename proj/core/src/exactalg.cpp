#include "heckecert/exactalg.hpp"

#include <utility>

#include "heckecert/error.hpp"
#include "heckecert/modarith.hpp"

namespace heckecert {

namespace ma = modarith;

namespace {

// Montgomery arithmetic for odd p < 2^62, R = 2^64. Values stay in [0, p).
struct Montgomery {
  ma::u64 p;
  ma::u64 neg_inv;  // -p^{-1} mod 2^64
  ma::u64 r2;       // 2^128 mod p

  explicit Montgomery(ma::u64 modulus) : p(modulus) {
    ma::u64 inv = p;  // Newton iteration: correct to 5, 10, 20, 40, 80 bits
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    neg_inv = ~inv + 1;
    const ma::u128 r = (static_cast<ma::u128>(1) << 64) % p;
    r2 = static_cast<ma::u64>(r * r % p);
  }
  ma::u64 redc(ma::u128 t) const {
    const ma::u64 m = static_cast<ma::u64>(t) * neg_inv;
    const ma::u64 u = static_cast<ma::u64>((t + static_cast<ma::u128>(m) * p) >> 64);
    return u >= p ? u - p : u;
  }
  ma::u64 mul(ma::u64 a, ma::u64 b) const { return redc(static_cast<ma::u128>(a) * b); }
  ma::u64 to(ma::u64 a) const { return mul(a, r2); }
  ma::u64 from(ma::u64 a) const { return redc(a); }
  ma::u64 inverse(ma::u64 a) const { return to(ma::inverse(from(a), p)); }
};

// Hessenberg reduction followed by the standard column recurrence (Cohen, Alg. 2.2.9).
// Works in Montgomery form for odd p, falls back to plain reduction for p = 2.
template <class Ring>
std::vector<ma::u64> hessenberg_charpoly_in(std::vector<ma::u64> h, std::size_t n, const Ring& R) {
  const ma::u64 p = R.p;
  auto at = [&](std::size_t i, std::size_t j) -> ma::u64& { return h[i * n + j]; };
  for (auto& x : h) x = R.to(x);

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && at(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(pivot, k), at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, pivot), at(k, j + 1));
    }
    const ma::u64 inv = R.inverse(at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      const ma::u64 u = R.mul(at(i, j), inv);
      if (u == 0) continue;
      ma::u64* row_i = &at(i, 0);
      const ma::u64* row_j = &at(j + 1, 0);
      for (std::size_t k = 0; k < n; ++k) row_i[k] = ma::sub(row_i[k], R.mul(u, row_j[k]), p);
      for (std::size_t k = 0; k < n; ++k) at(k, j + 1) = ma::add(at(k, j + 1), R.mul(u, at(k, i)), p);
    }
  }

  // polys[m] = charpoly of the leading m x m block.
  const ma::u64 one = R.to(1 % p);
  std::vector<std::vector<ma::u64>> polys(n + 1);
  polys[0] = {one};
  for (std::size_t m = 1; m <= n; ++m) {
    auto& cur = polys[m];
    const auto& prev = polys[m - 1];
    cur.assign(m + 1, 0);
    const ma::u64 diag = at(m - 1, m - 1);
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] = ma::add(cur[k + 1], prev[k], p);
      cur[k] = ma::sub(cur[k], R.mul(diag, prev[k]), p);
    }
    ma::u64 chain = one;
    for (std::size_t i = m - 1; i >= 1; --i) {
      chain = R.mul(chain, at(i, i - 1));  // h_{i+1,i} in 1-based indexing
      if (chain == 0) break;
      const ma::u64 coef = R.mul(chain, at(i - 1, m - 1));
      if (coef == 0) continue;
      const auto& lower = polys[i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) cur[k] = ma::sub(cur[k], R.mul(coef, lower[k]), p);
    }
  }
  auto out = std::move(polys[n]);
  for (auto& x : out) x = R.from(x);
  return out;
}

struct PlainRing {
  ma::u64 p;
  ma::u64 mul(ma::u64 a, ma::u64 b) const { return ma::mul(a, b, p); }
  ma::u64 to(ma::u64 a) const { return a; }
  ma::u64 from(ma::u64 a) const { return a; }
  ma::u64 inverse(ma::u64 a) const { return ma::inverse(a, p); }
};

std::vector<ma::u64> hessenberg_charpoly(std::vector<ma::u64> h, std::size_t n, ma::u64 p) {
  if (p % 2 == 1 && p < (ma::u64{1} << 62)) return hessenberg_charpoly_in(std::move(h), n, Montgomery(p));
  return hessenberg_charpoly_in(std::move(h), n, PlainRing{p});
}

BigInt ceil_sqrt(const BigInt& x) {
  BigInt r = isqrt(x);
  if (r * r < x) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> charpoly_mod(const IntMatrix& m, std::uint64_t p) {
  require(m.is_square(), ErrorKind::InvalidInput, "charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<ma::u64> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = mod_u64(m(i, j), p);
  return hessenberg_charpoly(std::move(h), n, p);
}

BigInt charpoly_coefficient_bound(const IntMatrix& m) {
  const std::size_t d = m.rows();
  const BigInt entry = m.max_abs();
  BigInt best = 1;
  BigInt entry_power = 1;
  BigInt d_power = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    entry_power *= entry;
    d_power *= static_cast<unsigned long>(d);
    BigInt b = binomial(d, i) * ceil_sqrt(d_power) * entry_power;
    if (b > best) best = b;
  }
  return best;
}

IntPoly charpoly(const IntMatrix& m, CharpolyTrace* trace) {
  require(m.is_square(), ErrorKind::InvalidInput, "charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};

  const BigInt bound = charpoly_coefficient_bound(m);
  const BigInt target = 2 * bound + 1;
  // Each modulus is > 2^61, so this many primes always suffice; the extra one checks.
  const std::size_t needed = bit_length(target) / 61 + 1;
  const auto primes = ma::crt_primes(needed + 1);

  std::vector<BigInt> acc(n + 1);
  BigInt modulus = 1;
  std::size_t used = 0;
  for (; used < needed && modulus < target; ++used) {
    const ma::u64 p = primes[used];
    const auto residues = charpoly_mod(m, p);
    const ma::u64 inv = ma::inverse(mod_u64(modulus, p), p);
    for (std::size_t k = 0; k <= n; ++k) {
      const ma::u64 t = ma::mul(ma::sub(residues[k], mod_u64(acc[k], p), p), inv, p);
      mpz_addmul_ui(acc[k].get_mpz_t(), modulus.get_mpz_t(), t);
    }
    modulus *= p;
  }
  require(modulus >= target, ErrorKind::Internal, "CRT modulus did not reach the coefficient bound");

  for (auto& c : acc) {
    if (2 * c > modulus) c -= modulus;
    require(cmpabs(c, bound) <= 0, ErrorKind::Internal, "reconstructed coefficient exceeds its bound");
  }

  const ma::u64 check = primes[needed];
  const auto check_residues = charpoly_mod(m, check);
  for (std::size_t k = 0; k <= n; ++k)
    require(mod_u64(acc[k], check) == check_residues[k], ErrorKind::Internal,
            "characteristic polynomial failed the verification residue");

  if (trace != nullptr) *trace = {used, check, bit_length(bound)};
  IntPoly result(std::move(acc));
  require(result.degree() == static_cast<int>(n) && result.is_monic(), ErrorKind::Internal,
          "characteristic polynomial is not monic of full degree");
  return result;
}

BigInt determinant(const IntMatrix& input) {
  require(input.is_square(), ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt previous = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a(k, k);
  }
  return sign_flip * a(n - 1, n - 1);
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorKind::InvalidInput, "resultant with the zero polynomial");
  const auto n = static_cast<std::size_t>(f.degree());
  const auto m = static_cast<std::size_t>(g.degree());
  if (n == 0 && m == 0) return 1;
  IntMatrix syl(n + m, n + m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) syl(i, i + j) = f.coeff(n - j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) syl(m + i, i + j) = g.coeff(m - j);
  return determinant(syl);
}

BigInt discriminant(const IntPoly& f) {
  require(f.degree() >= 1, ErrorKind::InvalidInput, "discriminant needs degree >= 1");
  const auto n = static_cast<unsigned long>(f.degree());
  const BigInt res = resultant(f, f.derivative());
  // Res(f, f') = 0 exactly when gcd(f, f') is non-constant.
  require(res != 0, ErrorKind::NotSquarefree, "polynomial " + f.to_string() + " has a repeated factor");
  BigInt disc;
  mpz_divexact(disc.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

bool is_perfect_square(const BigInt& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace heckecert

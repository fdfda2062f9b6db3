#include "heckecert/hecke.hpp"

#include <numeric>

#include "heckecert/error.hpp"

namespace heckecert {

namespace {

struct DivisorPower {
  unsigned long t;
  BigInt power;  // t^{w-1}
};

std::vector<DivisorPower> divisor_powers(unsigned long n, int w) {
  std::vector<DivisorPower> out;
  for (unsigned long t = 1; t <= n; ++t)
    if (n % t == 0) out.push_back({t, pow(BigInt(t), static_cast<unsigned long>(w - 1))});
  return out;
}

BigInt hecke_coefficient(const QSeries& f, std::size_t m, unsigned long n, const std::vector<DivisorPower>& divs) {
  BigInt acc = 0;
  for (const auto& [t, power] : divs) {
    if (m % t != 0) continue;
    const std::size_t index = m * n / (t * t);
    mpz_addmul(acc.get_mpz_t(), power.get_mpz_t(), f[index].get_mpz_t());
  }
  return acc;
}

void check_inputs(unsigned long n, int w) {
  require(n >= 1, ErrorKind::InvalidInput, "Hecke index must be positive");
  require(w >= 2 && w % 2 == 0, ErrorKind::InvalidInput, "weight must be even and >= 2, got " + std::to_string(w));
}

}  // namespace

QSeries hecke_action(const QSeries& f, unsigned long n, int w) { return hecke_action(f, n, w, f.prec() / n); }

QSeries hecke_action(const QSeries& f, unsigned long n, int w, std::size_t out_prec) {
  check_inputs(n, w);
  require(f.prec() >= n * out_prec, ErrorKind::InsufficientPrecision,
          "T_" + std::to_string(n) + " to O(q^" + std::to_string(out_prec + 1) + ") needs input precision " +
              std::to_string(n * out_prec) + ", have " + std::to_string(f.prec()));
  const auto divs = divisor_powers(n, w);
  std::vector<BigInt> out(out_prec + 1);
  for (std::size_t m = 0; m <= out_prec; ++m) {
    if (m == 0) {
      // a'(0) = sigma_{w-1}(n) a(0)
      for (const auto& d : divs) out[0] += d.power * f[0];
      continue;
    }
    out[m] = hecke_coefficient(f, m, n, divs);
  }
  return QSeries(std::move(out));
}

std::size_t hecke_precision(unsigned long n, int w) { return n * dim_cusp(w) + 1; }

HeckeMatrix hecke_matrix(unsigned long n, int w, std::span<const QSeries> basis) {
  check_inputs(n, w);
  const std::size_t d = dim_cusp(w);
  require(basis.size() == d, ErrorKind::InvalidInput, "basis size does not match dim S_" + std::to_string(w));
  HeckeMatrix result{n, w, IntMatrix(d, d)};
  const auto divs = divisor_powers(n, w);
  for (std::size_t i = 0; i < d; ++i) {
    const QSeries& f = basis[i];
    require(f.prec() >= n * d, ErrorKind::InsufficientPrecision,
            "T_" + std::to_string(n) + " on S_" + std::to_string(w) + " needs basis precision " +
                std::to_string(n * d) + ", have " + std::to_string(f.prec()));
    // Echelon form: the coordinate on f_j is the coefficient of q^j.
    for (std::size_t j = 0; j < d; ++j) result.entries(j, i) = hecke_coefficient(f, j + 1, n, divs);
  }
  return result;
}

HeckeMatrix hecke_matrix(unsigned long n, int w, BasisCache& cache) {
  check_inputs(n, w);
  if (dim_cusp(w) == 0) return {n, w, IntMatrix()};
  const auto basis = cache.get(w, hecke_precision(n, w));
  return hecke_matrix(n, w, basis->rows);
}

HeckeMatrix hecke_matrix(unsigned long n, int w) { return hecke_matrix(n, w, default_basis_cache()); }

std::optional<BigInt> is_scalar(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  const BigInt& lambda = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? lambda : BigInt(0))) return std::nullopt;
  return lambda;
}

std::optional<BigInt> is_scalar(const HeckeMatrix& m) { return is_scalar(m.entries); }

}  // namespace heckecert

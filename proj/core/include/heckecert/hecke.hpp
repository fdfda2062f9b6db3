#pragma once

#include <optional>
#include <span>

#include "heckecert/basis_cache.hpp"
#include "heckecert/matrix.hpp"
#include "heckecert/qseries.hpp"

namespace heckecert {

/// Matrix of T_n on S_w in the Miller basis; column i holds T_n(f_i).
struct HeckeMatrix {
  unsigned long n = 1;
  int w = 0;
  IntMatrix entries;

  std::size_t dim() const noexcept { return entries.rows(); }
};

/// a'(m) = sum_{t | gcd(m, n)} t^{w-1} a(mn/t^2), with output precision floor(prec / n).
QSeries hecke_action(const QSeries& f, unsigned long n, int w);
/// Same, truncated to `out_prec`; throws InsufficientPrecision unless f.prec() >= n * out_prec.
QSeries hecke_action(const QSeries& f, unsigned long n, int w, std::size_t out_prec);

/// Series precision hecke_matrix asks for: n * d + 1.
std::size_t hecke_precision(unsigned long n, int w);

HeckeMatrix hecke_matrix(unsigned long n, int w, std::span<const QSeries> basis);
HeckeMatrix hecke_matrix(unsigned long n, int w, BasisCache& cache);
HeckeMatrix hecke_matrix(unsigned long n, int w);

/// lambda when M = lambda * I; empty for non-scalar matrices and for d = 0.
std::optional<BigInt> is_scalar(const HeckeMatrix& m);
std::optional<BigInt> is_scalar(const IntMatrix& m);

}  // namespace heckecert

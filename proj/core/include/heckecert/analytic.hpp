#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace heckecert {

using real = __float128;

struct Complex {
  real re = 0;
  real im = 0;

  friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(Complex a, Complex b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Complex operator*(real s, Complex a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(Complex a, Complex b);
  Complex& operator+=(Complex b) {
    re += b.re;
    im += b.im;
    return *this;
  }
};

real abs(Complex z);
Complex pow(Complex z, long n);  // n may be negative
std::string to_string(real v, int digits = 20);
double to_double(real v);

struct EvalConfig {
  long truncation = 0;  // A; 0 picks the smallest A whose tail bound meets `tolerance`
  long max_truncation = 400000;
  unsigned precision_bits = 113;  // binary128 is the only supported working precision
  double tolerance = 1e-12;  // relative to the natural scale, see natural_scale()
  bool enforce_tolerance = true;
  bool reduce_to_fundamental_domain = true;
};

/// delta^{(k-1)/2}: the size of f_{k,D,d} (C_k = 1, delta = Dd) on the fundamental
/// domain. Tolerances are relative to this, transported by |cz + d|^{-2k} off it.
real natural_scale(unsigned k, long delta);

struct EvalResult {
  Complex value;
  real error = 0;  // absolute bound: lattice tails plus rounding
  long truncation = 0;
  std::size_t terms = 0;
  Complex reduced_point;
};

/// f_{k,D,d}(z) = (Dd)^{k-1/2} sum chi_d([a,b,c]) (a z^2 + b z + c)^{-k} over all forms of
/// discriminant Dd, with C_k = 1. Throws Domain for Im z <= 0, NeedsLargerTruncation when
/// the tail bound misses the tolerance.
EvalResult eval_f(unsigned k, long D, long d, Complex z, const EvalConfig& cfg = {});

struct HeckeCheck {
  Complex lhs;
  Complex rhs;
  real residual = 0;  // |lhs - rhs| / max(|lhs|, |rhs|)
  real error_estimate = 0;  // propagated evaluation errors on the same scale
  std::size_t evaluations = 0;
};

/// Compares p^{2k-1} f(pz) + (1/p) sum_j f((z+j)/p) with
/// f_{k,Dp^2,d} + (D/p) p^{k-1} f_{k,D,d} + p^{2k-1} f_{k,D/p^2,d}.
HeckeCheck check_hecke_identity(unsigned k, long D, long d, unsigned long p, Complex z, const EvalConfig& cfg = {});

struct QuadratureConfig {
  double tolerance = 1e-14;  // relative agreement of two successive levels
  unsigned initial_panels = 2;
  unsigned max_levels = 7;
};

/// Even period polynomial divided by i, as real coefficients of X^0..X^{2k-2}.
struct NumericPeriods {
  unsigned k = 0;
  long D = 0;
  long d = 0;
  std::vector<real> coeffs;
  real quadrature_error = 0;  // last level difference plus truncated tail
  real evaluation_error = 0;  // propagated lattice-sum error
  real max_imaginary = 0;  // |Im f(it)| seen on the contour (should be rounding noise)
  std::size_t evaluations = 0;
  unsigned panels = 0;
};

NumericPeriods numeric_rplus(unsigned k, long D, long d, const EvalConfig& cfg = {}, const QuadratureConfig& q = {});

struct PairFit {
  long D = 0;
  long d = 0;
  real scalar = 0;  // least-squares c with closed ~ c * numeric
  real spread = 0;  // max |ratio_m - scalar| / |scalar| over nonzero coefficients
  std::vector<std::pair<unsigned, real>> ratios;  // (power of X, closed/numeric)
  NumericPeriods numeric;
};

struct CkFit {
  unsigned k = 0;
  real scalar = 0;  // mean of the pair scalars
  real spread_within = 0;  // worst pair spread
  real spread_across = 0;  // max |pair scalar - scalar| / |scalar|
  std::vector<PairFit> pairs;
};

/// Throws InvalidInput when dim S_{2k} = 0 (the scalar is undefined).
CkFit infer_Ck(unsigned k, const std::vector<std::pair<long, long>>& pairs, const EvalConfig& cfg = {},
               const QuadratureConfig& q = {});

}  // namespace heckecert

#include "heckecert/analytic.hpp"

#include <quadmath.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "heckecert/binqf.hpp"
#include "heckecert/error.hpp"
#include "heckecert/lperiods.hpp"
#include "heckecert/modarith.hpp"
#include "heckecert/qseries.hpp"

namespace heckecert {

Complex operator/(Complex a, Complex b) {
  const real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

real abs(Complex z) { return hypotq(z.re, z.im); }

Complex pow(Complex z, long n) {
  if (n < 0) return Complex{1, 0} / pow(z, -n);
  Complex result{1, 0};
  while (n > 0) {
    if (n & 1) result = result * z;
    n >>= 1;
    if (n > 0) z = z * z;
  }
  return result;
}

std::string to_string(real v, int digits) {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.*Qg", digits, v);
  return buf;
}

double to_double(real v) { return static_cast<double>(v); }

real natural_scale(unsigned k, long delta) { return powq(static_cast<real>(delta), (static_cast<real>(k) - 1) / 2); }

namespace {

constexpr real kPi = M_PIq;
constexpr real kUnitRoundoff = FLT128_EPSILON;

// Residues r in [0, 2m) with r^2 = delta mod 4m, one list per m = 1..A. Shared per delta.
class ResidueTable {
 public:
  explicit ResidueTable(long delta) : delta_(delta) { rows_.emplace_back(); }

  const std::vector<long>& row(long m) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= m) {
      const long mm = static_cast<long>(rows_.size());
      std::vector<long> r;
      const long modulus = 4 * mm;
      const long target = ((delta_ % modulus) + modulus) % modulus;
      for (long x = delta_ & 1; x < 2 * mm; x += 2)
        if ((x * x) % modulus == target) r.push_back(x);
      rows_.push_back(std::move(r));
    }
    return rows_[static_cast<std::size_t>(m)];
  }

 private:
  long delta_;
  std::mutex mutex_;
  std::deque<std::vector<long>> rows_;  // stable references while growing
};

ResidueTable& residues_for(long delta) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<ResidueTable>> tables;
  std::lock_guard lock(mutex);
  auto& slot = tables[delta];
  if (!slot) slot = std::make_unique<ResidueTable>(delta);
  return *slot;
}

long largest_square_root_divisor(long n) {
  long s = 1;
  for (long p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      s *= p;
      n /= p * p;
    }
    while (n % p == 0) n /= p;
  }
  return s;
}

// Value of chi_d on [a, b, c]; d = 1 is the trivial character.
int chi_of(long d, long a, long b, long c) {
  if (d == 1) return 1;
  const long ad = std::labs(d);
  long g = std::gcd(std::gcd(std::labs(a), std::labs(b)), std::gcd(std::labs(c), ad));
  if (g != 1) return 0;
  for (long v : {a, c, a + b + c, a - b + c})
    if (v != 0 && std::gcd(std::labs(v), ad) == 1) return kronecker(static_cast<std::int64_t>(d), v);
  return genus_char(BigInt(d), make_form(a, b, c));
}

struct Reduction {
  Complex w;     // gamma z, in the closed fundamental domain
  Complex jac;   // c z + d
};

Reduction reduce(Complex z) {
  // gamma tracked as integer matrix; z -> w numerically alongside.
  long ga = 1, gb = 0, gc = 0, gd = 1;
  Complex w = z;
  for (int iter = 0; iter < 10000; ++iter) {
    const real shift = floorq(w.re + real(0.5));
    if (shift != 0) {
      const long n = static_cast<long>(shift);
      w.re -= shift;
      ga -= n * gc;
      gb -= n * gd;
    }
    const real norm = w.re * w.re + w.im * w.im;
    if (norm >= 1) break;
    w = Complex{-w.re / norm, w.im / norm};
    const long na = -gc, nb = -gd, nc = ga, nd = gb;
    ga = na, gb = nb, gc = nc, gd = nd;
  }
  return {w, static_cast<real>(gc) * z + Complex{static_cast<real>(gd), 0}};
}

real gamma_ratio_Ik(unsigned k) {
  const real kk = k;
  return sqrtq(kPi) * tgammaq(kk - real(0.5)) / tgammaq(kk);
}

// Bound on sum over a > A (both signs) of |sum_b Q^{-k}|, for A with theta <= 1/2.
real a_tail(unsigned k, long delta, real y, long A, long s) {
  const real kk = k;
  const real Ar = A;
  const real theta = static_cast<real>(delta) / (4 * Ar * Ar * y * y);
  const real C = powq(y * y * (1 - theta), -kk) + gamma_ratio_Ik(k) * powq(y, 1 - 2 * kk) * powq(1 - theta, real(0.5) - kk);
  const real bracket = (1 + logq(Ar)) / (kk - 1) + 1 / ((kk - 1) * (kk - 1));
  return 2 * 3 * static_cast<real>(s) * kk * C * powq(Ar, 1 - kk) * bracket;
}

long min_shell(long delta, real y) {
  return std::max(1L, static_cast<long>(ceilq(sqrtq(static_cast<real>(delta) / 2) / y)));
}

// Smallest A >= min_shell with a_tail <= budget; 0 when none below `cap`.
long choose_A(unsigned k, long delta, real y, real budget, long cap) {
  const long s = largest_square_root_divisor(delta);
  long lo = min_shell(delta, y);
  if (a_tail(k, delta, y, lo, s) <= budget) return lo;
  long hi = lo;
  while (a_tail(k, delta, y, hi, s) > budget) {
    if (hi >= cap) return 0;
    lo = hi;
    hi = std::min(cap, 2 * hi);
  }
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (a_tail(k, delta, y, mid, s) <= budget ? hi : lo) = mid;
  }
  return hi;
}

// Tail of one shell |a| = m beyond |t| > T, t = b + 2 a x.
real window_tail(unsigned k, long delta, long m, std::size_t count, real T) {
  const real kk = k;
  const real lambda = 1 / (1 - static_cast<real>(delta) / (T * T));
  const real mm = m;
  return 2 * static_cast<real>(count) * powq(4 * mm * lambda, kk) *
         (powq(T, -2 * kk) + powq(T, 1 - 2 * kk) / (2 * mm * (2 * kk - 1)));
}

real choose_T(unsigned k, long delta, long m, std::size_t count, real budget) {
  real T = sqrtq(2 * static_cast<real>(delta));
  if (count == 0) return T;
  const real guess = sqrtq(8 * static_cast<real>(m)) * powq(2 * static_cast<real>(count) / budget, real(1) / (2 * k));
  T = std::max(T, guess);
  while (window_tail(k, delta, m, count, T) > budget) T *= real(1.1);
  return T;
}

void check_eval_inputs(unsigned k, long D, long d, Complex z) {
  require(k >= 2, ErrorKind::InvalidInput, "k must be >= 2");
  const int want = (k % 2 == 0) ? 1 : -1;
  require((D > 0 ? 1 : -1) == want && (d > 0 ? 1 : -1) == want, ErrorKind::InvalidInput,
          "sign condition fails: need sign D = sign d = (-1)^k");
  require(is_fundamental_discriminant(BigInt(d)), ErrorKind::InvalidInput, std::to_string(d) + " is not fundamental");
  require(is_discriminant(BigInt(D)), ErrorKind::InvalidInput, std::to_string(D) + " is not a discriminant");
  const long delta = D * d;
  const long r = static_cast<long>(std::sqrt(static_cast<double>(delta)));
  for (long q = std::max(0L, r - 1); q <= r + 1; ++q)
    require(q * q != delta, ErrorKind::InvalidInput, "Dd = " + std::to_string(delta) + " is a square");
  require(z.im > 0, ErrorKind::Domain, "Im z must be positive, got " + to_string(z.im));
}

}  // namespace

EvalResult eval_f(unsigned k, long D, long d, Complex z, const EvalConfig& cfg) {
  check_eval_inputs(k, D, d, z);
  require(cfg.precision_bits <= 113, ErrorKind::Unsupported,
          "working precision is binary128 (113 bits); requested " + std::to_string(cfg.precision_bits));
  require(cfg.tolerance > 0, ErrorKind::InvalidInput, "tolerance must be positive");
  const long delta = D * d;

  Reduction red{z, {1, 0}};
  if (cfg.reduce_to_fundamental_domain) red = reduce(z);
  const Complex w = red.w;
  const real y = w.im;
  const real x = w.re;

  const real kk = k;
  const real prefactor = powq(static_cast<real>(delta), kk - real(0.5));
  // Absolute budget for the raw sum at w.
  const real raw_budget = static_cast<real>(cfg.tolerance) * natural_scale(k, delta) / prefactor;

  long A = cfg.truncation;
  if (A == 0) {
    A = choose_A(k, delta, y, raw_budget / 2, cfg.max_truncation);
    if (A == 0)
      fail(ErrorKind::NeedsLargerTruncation, "tail bound for k=" + std::to_string(k) + ", Dd=" + std::to_string(delta) +
                                                 " at Im z=" + to_string(y, 6) + " needs A > " +
                                                 std::to_string(cfg.max_truncation));
  }
  require(A >= min_shell(delta, y) || !cfg.enforce_tolerance, ErrorKind::NeedsLargerTruncation,
          "A=" + std::to_string(A) + " is below the first shell where the tail bound applies");

  auto& table = residues_for(delta);
  const real shell_budget = raw_budget / (4 * static_cast<real>(A));
  const Complex w2 = w * w;

  Complex acc{0, 0};
  real abs_sum = 0;
  real tail = 0;
  std::size_t terms = 0;
  for (long m = 1; m <= A; ++m) {
    const auto& rs = table.row(m);
    if (rs.empty()) continue;
    const real T = choose_T(k, delta, m, rs.size(), shell_budget);
    tail += window_tail(k, delta, m, rs.size(), T);
    for (int sign : {1, -1}) {
      const long a = sign * m;
      const real center = -2 * static_cast<real>(a) * x;
      const long lo = static_cast<long>(ceilq(center - T));
      const long hi = static_cast<long>(floorq(center + T));
      const long period = 2 * m;
      for (long r : rs) {
        long b = lo + ((r - lo) % period + period) % period;
        for (; b <= hi; b += period) {
          const long c = (b * b - delta) / (4 * a);
          const int chi = chi_of(d, a, b, c);
          if (chi == 0) continue;
          const Complex Q = static_cast<real>(a) * w2 + static_cast<real>(b) * w + Complex{static_cast<real>(c), 0};
          const Complex term = pow(Q, -static_cast<long>(k));
          abs_sum += abs(term);
          if (chi > 0)
            acc += term;
          else
            acc = acc - term;
          ++terms;
        }
      }
    }
  }
  const long s = largest_square_root_divisor(delta);
  if (A >= min_shell(delta, y))
    tail += a_tail(k, delta, y, A, s);
  else
    tail = HUGE_VALQ;

  const real rounding = 8 * (kk + 4) * kUnitRoundoff * abs_sum;
  real error = (tail + rounding) * prefactor;
  if (cfg.enforce_tolerance && cfg.truncation != 0)
    require(error <= static_cast<real>(cfg.tolerance) * natural_scale(k, delta), ErrorKind::NeedsLargerTruncation,
            "A=" + std::to_string(A) + " leaves an error bound of " + to_string(error, 6) + ", above the tolerance");

  // f(z) = (cz + d)^{-2k} f(gamma z)
  const Complex factor = pow(red.jac, -2 * static_cast<long>(k));
  EvalResult out;
  out.value = factor * (prefactor * acc);
  out.error = abs(factor) * error;
  out.truncation = A;
  out.terms = terms;
  out.reduced_point = w;
  return out;
}

HeckeCheck check_hecke_identity(unsigned k, long D, long d, unsigned long p, Complex z, const EvalConfig& cfg) {
  require(p >= 2 && modarith::is_prime(p), ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  require(d % static_cast<long>(p) != 0, ErrorKind::Precondition,
          "p=" + std::to_string(p) + " divides d=" + std::to_string(d));
  require(z.im > 0, ErrorKind::Domain, "Im z must be positive");

  const real pr = static_cast<real>(p);
  const real kk = k;
  HeckeCheck out;
  real err = 0;
  auto eval = [&](long DD, Complex zz, real multiplier) {
    EvalConfig c = cfg;
    c.tolerance = cfg.tolerance / static_cast<double>(std::max(real(1), fabsq(multiplier)));
    const EvalResult r = eval_f(k, DD, d, zz, c);
    ++out.evaluations;
    err += fabsq(multiplier) * r.error;
    return multiplier * r.value;
  };

  const real p_high = powq(pr, 2 * kk - 1);
  Complex lhs = eval(D, pr * z, p_high);
  for (unsigned long j = 1; j <= p; ++j) lhs += eval(D, (1 / pr) * (z + Complex{static_cast<real>(j), 0}), 1 / pr);

  const long pl = static_cast<long>(p);
  Complex rhs = eval(D * pl * pl, z, 1);
  const int leg = kronecker(static_cast<std::int64_t>(D), static_cast<std::int64_t>(p));
  if (leg != 0) rhs += eval(D, z, static_cast<real>(leg) * powq(pr, kk - 1));
  if (D % (pl * pl) == 0 && is_discriminant(BigInt(D / (pl * pl)))) rhs += eval(D / (pl * pl), z, p_high);

  out.lhs = lhs;
  out.rhs = rhs;
  const real scale = std::max(abs(lhs), abs(rhs));
  out.residual = scale > 0 ? abs(lhs - rhs) / scale : 0;
  out.error_estimate = scale > 0 ? err / scale : err;
  return out;
}

namespace {

using Quad = boost::multiprecision::float128;
constexpr unsigned kGaussPoints = 30;

struct GaussRule {
  std::vector<real> nodes;  // on [-1, 1]
  std::vector<real> weights;
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<Quad, kGaussPoints>;
    GaussRule g;
    const auto& x = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < x.size(); ++i) {
      const real xi = x[i].backend().value();
      const real wi = w[i].backend().value();
      g.nodes.push_back(xi);
      g.weights.push_back(wi);
      if (xi != 0) {
        g.nodes.push_back(-xi);
        g.weights.push_back(wi);
      }
    }
    return g;
  }();
  return rule;
}

// t beyond which e^{-2 pi (t-1)} t^{2k-2} / (2 pi) drops under `ratio`.
real contour_end(unsigned k, real ratio) {
  real t = 2;
  while (-2 * kPi * (t - 1) + (2 * static_cast<real>(k) - 2) * logq(t) - logq(2 * kPi) > logq(ratio)) t += real(0.25);
  return t;
}

struct Level {
  std::vector<real> integrals;  // I_n for even n, indexed n/2
  real eval_error = 0;  // worst moment
  real max_imag = 0;
  std::size_t evaluations = 0;
};

Level integrate_level(unsigned k, long D, long d, const EvalConfig& cfg, real s_end, unsigned panels) {
  const auto& rule = gauss_rule();
  const unsigned top = 2 * k - 2;
  Level lv;
  lv.integrals.assign(k, 0);
  std::vector<real> errors(k, 0);
  const real h = s_end / panels;
  const real sign_k = (k % 2 == 0) ? 1 : -1;
  for (unsigned p = 0; p < panels; ++p) {
    const real mid = (static_cast<real>(p) + real(0.5)) * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const real s = mid + h / 2 * rule.nodes[i];
      const real t = expq(s);
      const real weight = h / 2 * rule.weights[i] * t;  // dt = e^s ds
      const EvalResult r = eval_f(k, D, d, Complex{0, t}, cfg);
      ++lv.evaluations;
      lv.max_imag = std::max(lv.max_imag, fabsq(r.value.im));
      for (unsigned n = 0; n <= top; n += 2) {
        const real kernel = powq(t, static_cast<real>(n)) + sign_k * powq(t, static_cast<real>(top - n));
        lv.integrals[n / 2] += weight * kernel * r.value.re;
        errors[n / 2] += weight * fabsq(kernel) * r.error;
      }
    }
  }
  lv.eval_error = *std::max_element(errors.begin(), errors.end());
  return lv;
}

}  // namespace

NumericPeriods numeric_rplus(unsigned k, long D, long d, const EvalConfig& cfg, const QuadratureConfig& q) {
  check_eval_inputs(k, D, d, Complex{0, 1});
  require(q.initial_panels >= 1 && q.max_levels >= 2, ErrorKind::InvalidInput, "quadrature needs at least two levels");
  const unsigned top = 2 * k - 2;
  const real t_end = contour_end(k, static_cast<real>(q.tolerance) * real(1e-3));
  const real s_end = logq(t_end);

  NumericPeriods out;
  out.k = k;
  out.D = D;
  out.d = d;

  Level prev;
  unsigned panels = q.initial_panels;
  bool converged = false;
  real diff = 0;
  for (unsigned level = 0; level < q.max_levels; ++level, panels *= 2) {
    Level cur = integrate_level(k, D, d, cfg, s_end, panels);
    out.evaluations += cur.evaluations;
    out.max_imaginary = std::max(out.max_imaginary, cur.max_imag);
    if (level > 0) {
      real biggest = 0;
      diff = 0;
      for (std::size_t i = 0; i < cur.integrals.size(); ++i) {
        biggest = std::max(biggest, fabsq(cur.integrals[i]));
        diff = std::max(diff, fabsq(cur.integrals[i] - prev.integrals[i]));
      }
      const real floor = 4 * std::max(cur.eval_error, prev.eval_error);
      if (diff <= static_cast<real>(q.tolerance) * biggest || diff <= floor) {
        prev = std::move(cur);
        converged = true;
        break;
      }
    }
    prev = std::move(cur);
  }
  if (!converged)
    fail(ErrorKind::NoConvergence, "period quadrature did not settle after " + std::to_string(q.max_levels) +
                                       " levels; last difference " + to_string(diff, 6));
  out.panels = panels;

  // Tail past t_end, estimated from |f| at the endpoint and its e^{-2 pi t} decay.
  const EvalResult endpoint = eval_f(k, D, d, Complex{0, t_end}, cfg);
  ++out.evaluations;
  const real tail = abs(endpoint.value) * powq(t_end, static_cast<real>(top)) * 2 /
                    (2 * kPi - static_cast<real>(top) / t_end);

  out.coeffs.assign(top + 1, 0);
  real binom = 1;  // C(2k-2, n)
  for (unsigned n = 0; n <= top; ++n) {
    if (n % 2 == 0) {
      const real sign = (n / 2) % 2 == 0 ? 1 : -1;
      out.coeffs[top - n] = binom * sign * prev.integrals[n / 2];
    }
    binom = binom * static_cast<real>(top - n) / static_cast<real>(n + 1);
  }
  real max_binom = 1;  // C(2k-2, k-1)
  for (unsigned n = 0; n < top / 2; ++n) max_binom = max_binom * static_cast<real>(top - n) / (n + 1);
  out.quadrature_error = max_binom * (diff + tail);
  out.evaluation_error = max_binom * prev.eval_error;
  return out;
}

CkFit infer_Ck(unsigned k, const std::vector<std::pair<long, long>>& pairs, const EvalConfig& cfg,
               const QuadratureConfig& q) {
  require(!pairs.empty(), ErrorKind::InvalidInput, "infer_Ck needs at least one (D, d) pair");
  require(dim_cusp(2 * static_cast<int>(k)) > 0, ErrorKind::InvalidInput,
          "dim S_" + std::to_string(2 * k) + " = 0: the period polynomial vanishes and C_k is undefined");
  CkFit fit;
  fit.k = k;
  for (const auto& [D, d] : pairs) {
    const PeriodReport closed = rplus_closed(k, D, d);
    const NumericPeriods num = numeric_rplus(k, D, d, cfg, q);
    PairFit pf;
    pf.D = D;
    pf.d = d;
    real num_dot = 0, den_dot = 0;
    for (unsigned i = 0; i < num.coeffs.size(); ++i) {
      const Rational c = closed.rplus.coeff(i);
      if (c == 0) continue;
      const real cv = c.get_d();  // double is ample for the fit tolerances
      num_dot += cv * num.coeffs[i];
      den_dot += num.coeffs[i] * num.coeffs[i];
      pf.ratios.emplace_back(i, cv / num.coeffs[i]);
    }
    require(den_dot > 0 && !pf.ratios.empty(), ErrorKind::NoConvergence,
            "numeric periods vanish for (" + std::to_string(D) + ", " + std::to_string(d) + ")");
    pf.scalar = num_dot / den_dot;
    for (const auto& [i, ratio] : pf.ratios) pf.spread = std::max(pf.spread, fabsq(ratio - pf.scalar) / fabsq(pf.scalar));
    pf.numeric = num;
    fit.pairs.push_back(std::move(pf));
  }
  real sum = 0;
  for (const auto& pf : fit.pairs) sum += pf.scalar;
  fit.scalar = sum / static_cast<real>(fit.pairs.size());
  for (const auto& pf : fit.pairs) {
    fit.spread_within = std::max(fit.spread_within, pf.spread);
    fit.spread_across = std::max(fit.spread_across, fabsq(pf.scalar - fit.scalar) / fabsq(fit.scalar));
  }
  return fit;
}

}  // namespace heckecert

#include "heckecert/binqf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "heckecert/error.hpp"

namespace heckecert {

namespace {

constexpr int kTab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};  // (2/a) indexed by a mod 8

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

std::uint64_t to_u64_checked(const BigInt& v, const char* what) {
  require(v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 62, ErrorKind::Unsupported,
          std::string(what) + " out of supported range: " + v.get_str());
  return v.get_ui();
}

void check_positive_discriminant(const BigInt& delta) {
  require(delta > 0 && is_discriminant(delta), ErrorKind::InvalidInput,
          "invalid discriminant " + delta.get_str() + " (need > 0 and = 0, 1 mod 4)");
}

// Search order inside a shell: 0, 1, -1, 2, -2, ...
long zigzag(long i) { return (i % 2 == 1) ? (i + 1) / 2 : -(i / 2); }

BigInt gcd4(const Form& q, const BigInt& d) { return gcd(gcd(q.a, q.b), gcd(q.c, d)); }

}  // namespace

bool Form::is_primitive() const { return gcd(gcd(a, b), c) == 1; }

std::string Form::to_string() const {
  std::ostringstream os;
  os << '[' << a << ", " << b << ", " << c << ']';
  return os.str();
}

std::strong_ordering Form::operator<=>(const Form& rhs) const {
  if (int s = cmp(a, rhs.a); s != 0) return s <=> 0;
  if (int s = cmp(b, rhs.b); s != 0) return s <=> 0;
  return cmp(c, rhs.c) <=> 0;
}

Form make_form(long a, long b, long c) { return {BigInt(a), BigInt(b), BigInt(c)}; }

bool is_discriminant(const BigInt& value) {
  if (value == 0) return false;
  const unsigned long r = mpz_fdiv_ui(value.get_mpz_t(), 4);
  return r == 0 || r == 1;
}

bool is_fundamental_discriminant(const BigInt& value) {
  if (value == 1) return true;
  if (!is_discriminant(value)) return false;
  BigInt mag = abs(value);
  const unsigned long r = mpz_fdiv_ui(value.get_mpz_t(), 4);
  if (r == 1) return is_squarefree(to_u64_checked(mag, "discriminant"));
  const BigInt m = value / 4;
  const unsigned long m4 = mpz_fdiv_ui(m.get_mpz_t(), 4);
  if (m4 != 2 && m4 != 3) return false;
  return is_squarefree(to_u64_checked(abs(m), "discriminant"));
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a & 1) == 0 && (n & 1) == 0) return 0;
  // Work in unsigned magnitudes once the sign of n has been absorbed.
  int k = 1;
  unsigned v = 0;
  while ((n & 1) == 0) {
    n /= 2;
    ++v;
  }
  if (v % 2 == 1) k = kTab2[a & 7];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n > 0 odd. Reduce a mod n first so a becomes non-negative.
  std::uint64_t b = static_cast<std::uint64_t>(n);
  std::int64_t ar = a % n;
  if (ar < 0) ar += n;
  std::uint64_t x = static_cast<std::uint64_t>(ar);
  while (x != 0) {
    v = 0;
    while ((x & 1U) == 0) {
      x >>= 1U;
      ++v;
    }
    if (v % 2 == 1) k *= kTab2[b & 7U];
    if ((x & b & 2U) != 0) k = -k;
    const std::uint64_t r = x;
    x = b % r;
    b = r;
  }
  return b == 1 ? k : 0;
}

int kronecker(const BigInt& a_in, const BigInt& n_in) {
  if (n_in.fits_slong_p() && a_in.fits_slong_p()) return kronecker(std::int64_t{a_in.get_si()}, std::int64_t{n_in.get_si()});
  BigInt a = a_in;
  BigInt n = n_in;
  if (n == 0) return abs(a) == 1 ? 1 : 0;
  if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(n.get_mpz_t())) return 0;
  int k = 1;
  const mp_bitcnt_t v2 = mpz_scan1(n.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), v2);
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  if (v2 % 2 == 1) k *= kTab2[mpz_fdiv_ui(a.get_mpz_t(), 8)];
  BigInt x;
  mpz_fdiv_r(x.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  BigInt b = n;
  while (x != 0) {
    const mp_bitcnt_t v = mpz_scan1(x.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), v);
    if (v % 2 == 1) k *= kTab2[mpz_fdiv_ui(b.get_mpz_t(), 8)];
    if ((mpz_fdiv_ui(x.get_mpz_t(), 4) == 3) && (mpz_fdiv_ui(b.get_mpz_t(), 4) == 3)) k = -k;
    BigInt r = x;
    mpz_fdiv_r(x.get_mpz_t(), b.get_mpz_t(), r.get_mpz_t());
    b = r;
  }
  return b == 1 ? k : 0;
}

std::vector<Form> enumerate_straddling(const BigInt& delta) {
  check_positive_discriminant(delta);
  const std::uint64_t disc = to_u64_checked(delta, "discriminant");
  std::vector<Form> forms;
  // -4ac = delta - b^2 > 0, so b^2 < delta and |a| c = (delta - b^2) / 4.
  for (std::int64_t b = 0; static_cast<std::uint64_t>(b * b) < disc; ++b) {
    if ((disc - static_cast<std::uint64_t>(b * b)) % 4 != 0) continue;
    const std::uint64_t n = (disc - static_cast<std::uint64_t>(b * b)) / 4;
    for (std::uint64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      const BigInt a = -BigInt(static_cast<unsigned long>(m));
      const BigInt c = BigInt(static_cast<unsigned long>(n / m));
      forms.push_back({a, BigInt(static_cast<long>(b)), c});
      if (b != 0) forms.push_back({a, BigInt(static_cast<long>(-b)), c});
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

std::optional<std::vector<Form>> published_straddling_list(long delta) {
  struct Pair {
    long a, b, c;  // stands for [a, +-b, c]
  };
  struct Entry {
    long delta;
    std::vector<Pair> pairs;
  };
  static const std::vector<Entry> kPrinted = {
      {5, {{-1, 1, 1}}},
      {12, {{-1, 2, 2}, {-2, 2, 1}}},
      {21, {{-1, 1, 5}, {-3, 3, 1}, {-5, 1, 1}}},
      {33, {{-1, 1, 8}, {-2, 1, 4}, {-2, 3, 3}, {-3, 3, 2}, {-4, 1, 2}, {-6, 3, 1}, {-8, 1, 1}}},
      {65,
       {{-1, 1, 16},
        {-2, 1, 8},
        {-2, 3, 7},
        {-4, 1, 4},
        {-4, 7, 1},
        {-5, 5, 2},
        {-7, 3, 2},
        {-8, 1, 2},
        {-10, 5, 1},
        {-14, 3, 1},
        {-16, 1, 1}}},
      {40, {{-1, 2, 9}, {-2, 4, 3}, {-3, 2, 3}, {-3, 4, 2}, {-6, 4, 1}, {-9, 2, 1}}},
  };
  for (const auto& entry : kPrinted) {
    if (entry.delta != delta) continue;
    std::vector<Form> forms;
    for (const auto& p : entry.pairs) {
      forms.push_back(make_form(p.a, p.b, p.c));
      forms.push_back(make_form(p.a, -p.b, p.c));
    }
    std::sort(forms.begin(), forms.end());
    return forms;
  }
  return std::nullopt;
}

RepresentedValue represented_value_coprime(const Form& q, const BigInt& d, long box) {
  require(gcd4(q, d) == 1, ErrorKind::Precondition,
          "gcd(a, b, c, d) > 1 for " + q.to_string() + " and d = " + d.get_str());
  for (long m = 1; m <= box; ++m) {
    for (long i = 0; i <= 2 * m; ++i) {
      const long x = zigzag(i);
      for (long j = 0; j <= 2 * m; ++j) {
        const long y = zigzag(j);
        if (std::max(std::labs(x), std::labs(y)) != m) continue;
        BigInt value = q.evaluate(x, y);
        if (gcd(value, d) == 1) return {std::move(value), x, y};
      }
    }
  }
  fail(ErrorKind::NotFound, "no value of " + q.to_string() + " prime to " + d.get_str() + " with |x|, |y| <= " +
                                std::to_string(box));
}

int genus_char(const BigInt& d, const Form& q, long box) {
  require(is_fundamental_discriminant(d), ErrorKind::InvalidInput, d.get_str() + " is not a fundamental discriminant");
  const BigInt disc = q.discriminant();
  require(disc % d == 0 && is_discriminant(disc / d), ErrorKind::InvalidInput,
          "disc " + q.to_string() + " = " + disc.get_str() + " is not " + d.get_str() + " times a discriminant");
  if (gcd4(q, d) != 1) return 0;
  return kronecker(d, represented_value_coprime(q, d, box).value);
}

std::vector<Form> reduced_forms(const BigInt& delta) {
  check_positive_discriminant(delta);
  require(!mpz_perfect_square_p(delta.get_mpz_t()), ErrorKind::Unsupported,
          "reduction theory needs a non-square discriminant, got " + delta.get_str());
  const std::uint64_t disc = to_u64_checked(delta, "discriminant");
  const auto D = static_cast<std::int64_t>(disc);
  std::vector<Form> forms;
  for (std::int64_t b = 1; b * b < D; ++b) {
    if ((D - b * b) % 4 != 0) continue;
    const std::int64_t n = (D - b * b) / 4;  // = -ac > 0
    for (std::int64_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      // sqrt(D) - b < 2m  <=>  (2m + b)^2 > D;   2m < sqrt(D) + b  <=>  2m - b < 0 or (2m - b)^2 < D
      const std::int64_t lo = 2 * m + b;
      const std::int64_t hi = 2 * m - b;
      if (lo * lo <= D || (hi >= 0 && hi * hi >= D)) continue;
      forms.push_back(make_form(static_cast<long>(m), static_cast<long>(b), static_cast<long>(-n / m)));
      forms.push_back(make_form(static_cast<long>(-m), static_cast<long>(b), static_cast<long>(n / m)));
    }
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

Form rho(const Form& q) {
  const BigInt delta = q.discriminant();
  require(q.c != 0, ErrorKind::InvalidInput, "rho needs c != 0");
  const BigInt root = isqrt(delta);
  const BigInt modulus = 2 * abs(q.c);
  // Largest b' <= floor(sqrt(delta)) with b' = -b mod 2|c|.
  BigInt offset;
  mpz_fdiv_r(offset.get_mpz_t(), BigInt(root + q.b).get_mpz_t(), modulus.get_mpz_t());
  const BigInt bp = root - offset;
  BigInt num = bp * bp - delta;
  BigInt den = 4 * q.c;
  require(num % den == 0, ErrorKind::Internal, "rho produced a non-integral form from " + q.to_string());
  return {q.c, bp, num / den};
}

std::vector<std::vector<Form>> reduction_cycles(const BigInt& delta) {
  const std::vector<Form> reduced = reduced_forms(delta);
  std::set<Form> pending(reduced.begin(), reduced.end());
  std::vector<std::vector<Form>> cycles;
  while (!pending.empty()) {
    const Form start = *pending.begin();
    std::vector<Form> cycle;
    Form cur = start;
    do {
      require(pending.erase(cur) == 1, ErrorKind::Internal, "rho left the set of reduced forms at " + cur.to_string());
      cycle.push_back(cur);
      cur = rho(cur);
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace heckecert

#include "heckecert/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "heckecert/error.hpp"

namespace heckecert {

QSeries::QSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), ErrorKind::InvalidInput, "a q-series needs at least the constant term");
}

QSeries QSeries::zero(std::size_t prec) { return QSeries(std::vector<BigInt>(prec + 1)); }

QSeries QSeries::one(std::size_t prec) { return monomial(0, prec); }

QSeries QSeries::monomial(std::size_t shift, std::size_t prec) {
  std::vector<BigInt> c(prec + 1);
  if (shift <= prec) c[shift] = 1;
  return QSeries(std::move(c));
}

const BigInt& QSeries::at(std::size_t n) const {
  if (n > prec())
    fail(ErrorKind::InsufficientPrecision,
         "coefficient q^" + std::to_string(n) + " requested from a series known to O(q^" +
             std::to_string(prec() + 1) + ")");
  return coeffs_[n];
}

std::size_t QSeries::valuation() const noexcept {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  return static_cast<std::size_t>(it - coeffs_.begin());
}

QSeries QSeries::truncate(std::size_t new_prec) const {
  require(new_prec <= prec(), ErrorKind::InsufficientPrecision,
          "cannot extend precision from " + std::to_string(prec()) + " to " + std::to_string(new_prec));
  return QSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_prec + 1)));
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator-(QSeries s) {
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

QSeries QSeries::exact_divide(const BigInt& divisor) const {
  require(divisor != 0, ErrorKind::InvalidInput, "division of a q-series by zero");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!mpz_divisible_p(coeffs_[n].get_mpz_t(), divisor.get_mpz_t()))
      fail(ErrorKind::Internal, "coefficient of q^" + std::to_string(n) + " is not divisible by " +
                                    heckecert::to_string(divisor));
    mpz_divexact(out[n].get_mpz_t(), coeffs_[n].get_mpz_t(), divisor.get_mpz_t());
  }
  return QSeries(std::move(out));
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const BigInt& c = coeffs_[n];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (n == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (n > 1) os << "^" << n;
  }
  if (!first) os << " + ";
  os << "O(q^" << prec() + 1 << ")";
  return os.str();
}

QSeries multiply_schoolbook(const QSeries& lhs, const QSeries& rhs) {
  std::size_t prec = std::min(lhs.prec(), rhs.prec());
  std::vector<BigInt> out(prec + 1);
  for (std::size_t i = 0; i <= prec; ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; i + j <= prec; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), lhs[i].get_mpz_t(), rhs[j].get_mpz_t());
  }
  return QSeries(std::move(out));
}

namespace {

constexpr std::size_t kLimbBits = GMP_NUMB_BITS;

std::size_t max_bits(std::span<const BigInt> c) {
  std::size_t bits = 0;
  for (const auto& x : c) bits = std::max(bits, bit_length(x));
  return bits;
}

// Packs sum c[i] * 2^(slot_bits * i) into one integer; slot_bits = slot_limbs * 64
// so that every coefficient lands on a limb boundary.
BigInt pack(std::span<const BigInt> c, std::size_t slot_limbs) {
  const std::size_t total = c.size() * slot_limbs;
  BigInt pos, neg;
  mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* m = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(p, p + total, mp_limb_t{0});
  std::fill(m, m + total, mp_limb_t{0});
  for (std::size_t i = 0; i < c.size(); ++i) {
    const mpz_srcptr z = c[i].get_mpz_t();
    const std::size_t size = mpz_size(z);
    if (size == 0) continue;
    const mp_limb_t* src = mpz_limbs_read(z);
    std::copy(src, src + size, (mpz_sgn(z) > 0 ? p : m) + i * slot_limbs);
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  return pos - neg;
}

// Inverse of pack for balanced digits |c_i| < 2^(slot_bits - 1); fills out[0..count).
void unpack(const BigInt& packed, std::size_t slot_limbs, std::span<BigInt> out) {
  const int s = sgn(packed);
  const mpz_srcptr z = packed.get_mpz_t();
  const std::size_t size = mpz_size(z);
  const mp_limb_t* limbs = mpz_limbs_read(z);
  const std::size_t slot_bits = slot_limbs * kLimbBits;
  BigInt base;
  mpz_setbit(base.get_mpz_t(), slot_bits);
  unsigned long carry = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t lo = i * slot_limbs;
    std::size_t n = lo >= size ? 0 : std::min(slot_limbs, size - lo);
    while (n > 0 && limbs[lo + n - 1] == 0) --n;
    mpz_t view;
    mpz_roinit_n(view, n ? limbs + lo : nullptr, static_cast<mp_size_t>(n));
    BigInt& digit = out[i];
    mpz_add_ui(digit.get_mpz_t(), view, carry);
    if (digit != 0 && mpz_sizeinbase(digit.get_mpz_t(), 2) >= slot_bits) {
      digit -= base;
      carry = 1;
    } else {
      carry = 0;
    }
    if (s < 0) digit = -digit;
  }
}

}  // namespace

QSeries multiply_kronecker(const QSeries& lhs, const QSeries& rhs) {
  const std::size_t prec = std::min(lhs.prec(), rhs.prec());
  const std::size_t va = lhs.valuation();
  const std::size_t vb = rhs.valuation();
  std::vector<BigInt> out(prec + 1);
  if (va + vb > prec) return QSeries(std::move(out));

  // Only coefficients with index <= prec - (va + vb) of the shifted product survive.
  const std::size_t span_len = prec - va - vb + 1;
  auto a = lhs.coeffs().subspan(va, span_len);
  auto b = rhs.coeffs().subspan(vb, span_len);

  // |product coefficient| <= span_len * max|a| * max|b|; one extra bit for the sign.
  const std::size_t need = max_bits(a) + max_bits(b) + bit_length(BigInt(static_cast<unsigned long>(span_len))) + 1;
  const std::size_t slot_limbs = (need + kLimbBits - 1) / kLimbBits;

  BigInt product = pack(a, slot_limbs) * pack(b, slot_limbs);
  unpack(product, slot_limbs, std::span<BigInt>(out).subspan(va + vb, span_len));
  return QSeries(std::move(out));
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  if (std::min(lhs.prec(), rhs.prec()) < 24) return multiply_schoolbook(lhs, rhs);
  return multiply_kronecker(lhs, rhs);
}

QSeries pow(const QSeries& base, unsigned exponent) {
  QSeries result = QSeries::one(base.prec());
  QSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

std::size_t dim_cusp(int w) {
  require(w >= 0 && w % 2 == 0, ErrorKind::InvalidInput,
          "weight must be a non-negative even integer, got " + std::to_string(w));
  if (w < 12) return 0;
  std::size_t d = static_cast<std::size_t>(w / 12);
  if (w % 12 == 2) --d;
  return d;
}

QSeries eisenstein(int w, std::size_t prec) {
  long scale = 0;
  if (w == 4)
    scale = 240;
  else if (w == 6)
    scale = -504;
  else
    fail(ErrorKind::InvalidInput, "Eisenstein generators are E4 and E6 only, got weight " + std::to_string(w));

  std::vector<BigInt> sigma(prec + 1);
  for (std::size_t d = 1; d <= prec; ++d) {
    BigInt power = pow(BigInt(static_cast<unsigned long>(d)), static_cast<unsigned long>(w - 1));
    for (std::size_t m = d; m <= prec; m += d) sigma[m] += power;
  }
  sigma[0] = 1;
  for (std::size_t n = 1; n <= prec; ++n) sigma[n] *= scale;
  return QSeries(std::move(sigma));
}

QSeries delta(std::size_t prec) {
  require(prec >= 1, ErrorKind::InvalidInput, "Delta needs prec >= 1");
  QSeries e4 = eisenstein(4, prec);
  QSeries e6 = eisenstein(6, prec);
  return (e4 * e4 * e4 - e6 * e6).exact_divide(1728);
}

std::vector<QSeries> miller_basis(int w, std::size_t prec) {
  const std::size_t d = dim_cusp(w);
  if (d == 0) return {};
  require(prec >= d, ErrorKind::InsufficientPrecision,
          "Miller basis of weight " + std::to_string(w) + " needs prec >= " + std::to_string(d));

  // Weight-(w mod 12) factor; the remaining weight is 12 * d, filled by Delta^i * (E4^3)^(d-i).
  const QSeries e4 = eisenstein(4, prec);
  const QSeries e6 = eisenstein(6, prec);
  QSeries tail = QSeries::one(prec);
  switch (w % 12) {
    case 0: break;
    case 2: tail = e4 * e4 * e6; break;
    case 4: tail = e4; break;
    case 6: tail = e6; break;
    case 8: tail = e4 * e4; break;
    case 10: tail = e4 * e6; break;
  }
  const QSeries e4_cubed = e4 * e4 * e4;
  const QSeries disc = delta(prec);

  // filler[j] = (E4^3)^j * tail for j = 0 .. d-1
  std::vector<QSeries> filler;
  filler.reserve(d);
  filler.push_back(tail);
  for (std::size_t j = 1; j < d; ++j) filler.push_back(filler.back() * e4_cubed);

  std::vector<QSeries> basis;
  basis.reserve(d);
  QSeries delta_power = disc;
  for (std::size_t i = 1; i <= d; ++i) {
    if (i > 1) delta_power = delta_power * disc;
    basis.push_back(delta_power * filler[d - i]);
  }

  // Rows are unitriangular in positions 1..d; clear the entries above the diagonal.
  for (std::size_t i = d; i-- > 0;) {
    std::vector<BigInt> row(basis[i].coeffs().begin(), basis[i].coeffs().end());
    for (std::size_t j = i + 1; j < d; ++j) {
      const BigInt factor = row[j + 1];
      if (factor == 0) continue;
      const auto& other = basis[j].coeffs();
      for (std::size_t n = j + 1; n <= prec; ++n)
        mpz_submul(row[n].get_mpz_t(), factor.get_mpz_t(), other[n].get_mpz_t());
    }
    basis[i] = QSeries(std::move(row));
  }
  return basis;
}

}  // namespace heckecert

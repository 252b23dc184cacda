#include "qnc/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qnc {

namespace {

// MPFR keeps the exponent range in thread-local state.
void widen_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

void check_precision(Precision bits) {
  if (bits < kMinPrecision || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("precision must be at least " +
                                std::to_string(kMinPrecision) + " bits, got " +
                                std::to_string(bits));
  }
}

std::partial_ordering from_cmp(int c) {
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

Real::Real(Precision bits) {
  widen_exponent_range();
  check_precision(bits);
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision bits) : Real(bits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(double value, Precision bits) : Real(bits) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(std::string_view decimal, Precision bits) : Real(bits) {
  std::string text(decimal);
  char* end = nullptr;
  mpfr_strtofr(value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == text.c_str() || *end != '\0') {
    throw std::invalid_argument("not a decimal number: '" + text + "'");
  }
}

Real::Real(const Real& other) {
  widen_exponent_range();
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  widen_exponent_range();
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::infinity(Precision bits) {
  Real r(bits);
  mpfr_set_inf(r.value_, 1);
  return r;
}

Real Real::pow2(long exponent, Precision bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

long Real::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return 0;
  return mpfr_get_exp(value_);
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(join_precision(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(join_precision(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(join_precision(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(join_precision(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.precision());
  mpfr_add_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.precision());
  mpfr_sub_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.precision());
  mpfr_div_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp(a.value_, b.value_));
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp_si(a.value_, b));
}

std::partial_ordering operator<=>(const Real& a, double b) {
  if (mpfr_nan_p(a.value_) || b != b) return std::partial_ordering::unordered;
  return from_cmp(mpfr_cmp_d(a.value_, b));
}

#define QNC_UNARY(name, fn)                       \
  Real name(const Real& x) {                      \
    Real r(x.precision());                        \
    fn(r.raw(), x.raw(), MPFR_RNDN);              \
    return r;                                     \
  }

QNC_UNARY(abs, mpfr_abs)
QNC_UNARY(sqrt, mpfr_sqrt)
QNC_UNARY(exp, mpfr_exp)
QNC_UNARY(exp2, mpfr_exp2)
QNC_UNARY(log, mpfr_log)
QNC_UNARY(log2, mpfr_log2)
QNC_UNARY(sin, mpfr_sin)
QNC_UNARY(cos, mpfr_cos)

#undef QNC_UNARY

Real pow(const Real& base, const Real& exponent) {
  Real r(join_precision(base, exponent));
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long exponent) {
  Real r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), exponent, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }
Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }

}  // namespace qnc

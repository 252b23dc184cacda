#pragma once

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace qnc {

/// Working mantissa size in bits.
using Precision = long;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 192;

// Arbitrary-precision real backed by MPFR. Every value carries its own
// precision; binary operations round to the larger of the two operand
// precisions. The exponent range is widened to the MPFR maximum, so values
// like 1223^-1217 are representable without underflow.
class Real {
 public:
  explicit Real(Precision bits = kDefaultPrecision);
  Real(long value, Precision bits);
  Real(int value, Precision bits) : Real(static_cast<long>(value), bits) {}
  Real(double value, Precision bits);
  Real(std::string_view decimal, Precision bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real infinity(Precision bits);
  static Real pow2(long exponent, Precision bits);

  Precision precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }

  // Decimal rendering. digits == 0 prints enough digits to round-trip.
  std::string to_string(int digits = 0) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  bool is_inf() const noexcept { return mpfr_inf_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  // base-2 exponent e with 2^(e-1) <= |x| < 2^e; 0 for zero.
  long exponent() const noexcept;

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  Real operator-() const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator-(long a, const Real& b);
  friend Real operator*(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b);
  friend Real operator/(long a, const Real& b);

  // Floating scalars must be wrapped in Real explicitly.
  template <std::floating_point F> friend Real operator+(const Real&, F) = delete;
  template <std::floating_point F> friend Real operator-(const Real&, F) = delete;
  template <std::floating_point F> friend Real operator*(const Real&, F) = delete;
  template <std::floating_point F> friend Real operator*(F, const Real&) = delete;
  template <std::floating_point F> friend Real operator/(const Real&, F) = delete;
  template <std::floating_point F> Real& operator*=(F) = delete;
  template <std::floating_point F> Real& operator/=(F) = delete;

  friend bool operator==(const Real& a, const Real& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real exp2(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real ldexp(const Real& x, long exponent);
Real sin(const Real& x);
Real cos(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

// Largest of the arguments' precisions.
inline Precision join_precision(const Real& a, const Real& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}

}  // namespace qnc

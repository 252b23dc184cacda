#pragma once

#include "qnc/real.hpp"

#include <utility>

namespace qnc {

// Complex number over Real. Both parts share one precision.
struct Complex {
  Real re;
  Real im;

  explicit Complex(Precision bits = kDefaultPrecision) : re(bits), im(bits) {}
  Complex(Real real_part, Real imag_part) : re(std::move(real_part)), im(std::move(imag_part)) {}
  explicit Complex(const Real& real_part) : re(real_part), im(real_part.precision()) {}
  Complex(double real_part, double imag_part, Precision bits)
      : re(real_part, bits), im(imag_part, bits) {}

  Precision precision() const noexcept { return join_precision(re, im); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  Complex& operator+=(const Complex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }
  Complex& operator-=(const Complex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
  }
  Complex& operator*=(const Complex& rhs);
  Complex& operator/=(long rhs) {
    re /= rhs;
    im /= rhs;
    return *this;
  }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
  friend Complex operator*(const Real& b, const Complex& a) { return {a.re * b, a.im * b}; }
  friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
  friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
  friend Complex operator/(const Complex& a, const Complex& b);
};

inline Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) { return sqrt(norm(z)); }

inline Complex operator/(const Complex& a, const Complex& b) {
  Real d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline Complex exp(const Complex& z) {
  Real scale = exp(z.re);
  return {scale * cos(z.im), scale * sin(z.im)};
}

}  // namespace qnc

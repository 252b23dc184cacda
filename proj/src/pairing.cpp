#include "qnc/pairing.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qnc/errors.hpp"

namespace qnc {

namespace {

constexpr int kMaxTerms = 100000;
constexpr long kLogSpaceThreshold = 10000;  // bits

// Generates t_k = x^{k-1} u_k / (1 - u_k)^2 with u_k = y^{-x^k}, together
// with the ratio majorant rho_k = x y^{-x^k (x-1)} >= t_{k+1}/t_k.
class FTerms {
 public:
  FTerms(const Real& x, const Real& y)
      : x_(x),
        prec_(join_precision(x, y)),
        log_y_(log(y)),
        x_minus_one_(x - 1L),
        power_prev_(1L, prec_),
        power_(x * Real(1L, prec_)) {}

  // Term for the current k, then advance to k+1.
  Real next(Real& denominator, Real& ratio_majorant) {
    Real u = exp(-(power_ * log_y_));
    Real one_minus = 1L - u;
    denominator = one_minus * one_minus;
    Real term = power_prev_ * u / denominator;
    ratio_majorant = x_ * exp(-(power_ * x_minus_one_ * log_y_));
    power_prev_ = power_;
    power_ *= x_;
    return term;
  }

  Precision precision() const noexcept { return prec_; }

 private:
  Real x_;
  Precision prec_;
  Real log_y_;
  Real x_minus_one_;
  Real power_prev_;  // x^{k-1}
  Real power_;       // x^k
};

void check_domain(const Real& x, const Real& y) {
  if (!(x > 1L) || !(y > 1L)) {
    throw DomainError("F(x, y) requires x > 1 and y > 1, got x = " + x.to_string(12) +
                      ", y = " + y.to_string(12));
  }
}

}  // namespace

SeriesValue eval_F(const Real& x, const Real& y, double target_rel_err) {
  check_domain(x, y);
  if (!(target_rel_err > 0.0 && target_rel_err < 1.0)) {
    throw DomainError("target_rel_err must lie in (0, 1)");
  }
  FTerms terms(x, y);
  const Precision prec = terms.precision();
  const Real target(target_rel_err, prec);
  Real half(0.5, prec);

  SeriesValue out{Real(prec), Real(prec), 0, Real::infinity(prec)};
  Real denominator(prec);
  Real rho(prec);
  Real pending = terms.next(denominator, rho);  // t_1
  out.min_denominator = denominator;
  // rho here bounds t_2/t_1; after each step it bounds the ratio following
  // the pending term.
  while (true) {
    if (out.terms_used > 0 && rho <= half && pending * 2L <= target * out.value) {
      out.truncation_error = pending * 2L;
      return out;
    }
    if (pending.is_zero() && out.terms_used > 0) {
      // u underflowed even the widened exponent range.
      out.truncation_error = Real(prec);
      return out;
    }
    if (out.terms_used >= kMaxTerms) {
      throw NumericalError("F(x, y) did not reach the requested accuracy in " +
                           std::to_string(kMaxTerms) + " terms");
    }
    out.value += pending;
    ++out.terms_used;
    pending = terms.next(denominator, rho);
    out.min_denominator = min(out.min_denominator, denominator);
  }
}

SeriesValue eval_F_terms(const Real& x, const Real& y, int terms_wanted) {
  check_domain(x, y);
  FTerms terms(x, y);
  const Precision prec = terms.precision();
  SeriesValue out{Real(prec), Real(prec), 0, Real::infinity(prec)};
  Real denominator(prec);
  Real rho(prec);
  Real pending = terms.next(denominator, rho);
  out.min_denominator = denominator;
  while (out.terms_used < terms_wanted) {
    out.value += pending;
    ++out.terms_used;
    pending = terms.next(denominator, rho);
    out.min_denominator = min(out.min_denominator, denominator);
  }
  if (rho < 1L) {
    out.truncation_error = pending / (1L - rho);
  } else {
    out.truncation_error = Real::infinity(prec);
  }
  return out;
}

QncValue qnc_evaluate(const Real& x, const Real& y, double target_rel_err) {
  check_domain(x, y);
  const Precision prec = join_precision(x, y);
  if (x == y) return {Real(prec), Real(prec)};

  const double floor_rel = std::ldexp(1.0, -static_cast<int>(prec - 8));
  const double target = (target_rel_err <= 0.0 || target_rel_err > floor_rel)
                            ? floor_rel
                            : target_rel_err;
  SeriesValue fxy = eval_F(x, y, target);
  SeriesValue fyx = eval_F(y, x, target);

  Real a = x * (y - 1L);
  Real b = y * (x - 1L);
  Real scale = x * y * 12L;
  Real value = (a * fxy.value - b * fyx.value) / scale;
  Real error = (a * fxy.truncation_error + b * fyx.truncation_error) / scale;
  return {std::move(value), std::move(error)};
}

Real qnc_bound_log2(long p, long q, Precision bits) {
  Real lp = log2(Real(p, bits));
  Real lq = log2(Real(q, bits));
  Real a = -(lp * q);  // log2 p^-q
  Real b = -(lq * p);  // log2 q^-p
  Real hi = max(a, b);
  Real lo = min(a, b);
  // log2((2^hi + 2^lo) / 2) = hi + log2(1 + 2^(lo - hi)) - 1
  return hi + log2(exp2(lo - hi) + 1L) - 1L;
}

Real qnc_bound(long p, long q, Precision bits) {
  Real lp = log2(Real(p, bits));
  Real lq = log2(Real(q, bits));
  if (lp * q > kLogSpaceThreshold || lq * p > kLogSpaceThreshold) {
    return exp2(qnc_bound_log2(p, q, bits));
  }
  return (pow(Real(p, bits), -q) + pow(Real(q, bits), -p)) / 2L;
}

Real tilde_correction(long p, long q, Precision bits) {
  if (p == q) return Real(bits);
  Real diff = Real(1L, bits) / (q - 1) - Real(1L, bits) / (p - 1);
  return diff / (12L * p * q);
}

}  // namespace qnc

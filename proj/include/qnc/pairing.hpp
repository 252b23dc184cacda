#pragma once

#include "qnc/real.hpp"

namespace qnc {

// Partial sum of a positive series with a rigorous bound on the omitted tail:
// the infinite sum lies in [value, value + truncation_error].
struct SeriesValue {
  Real value;
  Real truncation_error;
  int terms_used = 0;
  // Smallest (1 - y^{-x^k})^2 among evaluated terms (and the first omitted one).
  Real min_denominator;
};

// F(x, y) = sum_{k>=1} x^{k-1} y^{-x^k} / (1 - y^{-x^k})^2 for x, y > 1.
//
// Terms are summed until the tail bound 2 t_{K+1} drops below
// target_rel_err times the partial sum. The bound is certified by the ratio
// majorant t_{k+1}/t_k <= x y^{-x^k (x-1)}, which decreases in k and must
// be <= 1/2 at the cutoff. Throws DomainError unless x > 1, y > 1 and
// 0 < target_rel_err < 1.
SeriesValue eval_F(const Real& x, const Real& y, double target_rel_err);

// Exactly `terms` terms of F(x, y). truncation_error is the geometric tail
// bound when the ratio majorant is below 1, otherwise +inf.
SeriesValue eval_F_terms(const Real& x, const Real& y, int terms);

struct QncValue {
  Real value;
  Real abs_error;  // propagated series truncation bound
};

// QNC(x, y) = (x(y-1)F(x,y) - y(x-1)F(y,x)) / (12xy). target_rel_err <= 0
// selects 2^-(prec-8), prec being the larger input precision; any request
// looser than that is tightened to it. Exactly zero when x == y.
QncValue qnc_evaluate(const Real& x, const Real& y, double target_rel_err = 0.0);

inline Real qnc(const Real& x, const Real& y, double target_rel_err = 0.0) {
  return qnc_evaluate(x, y, target_rel_err).value;
}

// Entry bound (p^-q + q^-p) / 2. Switches to log-space combination when
// either power is below 2^-10000.
Real qnc_bound(long p, long q, Precision bits = kDefaultPrecision);

// log2 of qnc_bound(p, q), computed in log space throughout.
Real qnc_bound_log2(long p, long q, Precision bits = kDefaultPrecision);

// Extra term from including k = 0 in F: (1/(12pq)) (1/(q-1) - 1/(p-1)).
Real tilde_correction(long p, long q, Precision bits = kDefaultPrecision);

}  // namespace qnc

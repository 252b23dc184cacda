#include "qnc/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qnc/errors.hpp"

namespace qnc {

namespace {

// Scratch registers for the Jacobi inner loops; avoids an allocation per
// arithmetic operation.
struct Scratch {
  explicit Scratch(Precision bits)
      : a(bits), b(bits), c(bits), s(bits), t(bits), u(bits), v(bits), w(bits) {}
  Real a, b, c, s, t, u, v, w;
};

void dot_into(Real& out, const std::vector<Real>& x, const std::vector<Real>& y) {
  mpfr_set_zero(out.raw(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    mpfr_fma(out.raw(), x[i].raw(), y[i].raw(), out.raw(), MPFR_RNDN);
  }
}

// Rotation (c, s) with t = tan: zeroes off-diagonal given (alpha, beta, gamma),
// with t the smaller root of t^2 + 2 zeta t - 1 = 0, zeta = (beta-alpha)/(2 gamma).
void rotation(Scratch& r, const Real& alpha, const Real& beta, const Real& gamma) {
  mpfr_sub(r.u.raw(), beta.raw(), alpha.raw(), MPFR_RNDN);
  mpfr_div(r.u.raw(), r.u.raw(), gamma.raw(), MPFR_RNDN);
  mpfr_div_2ui(r.u.raw(), r.u.raw(), 1, MPFR_RNDN);  // zeta
  mpfr_sqr(r.v.raw(), r.u.raw(), MPFR_RNDN);
  mpfr_add_ui(r.v.raw(), r.v.raw(), 1, MPFR_RNDN);
  mpfr_sqrt(r.v.raw(), r.v.raw(), MPFR_RNDN);
  mpfr_abs(r.w.raw(), r.u.raw(), MPFR_RNDN);
  mpfr_add(r.w.raw(), r.w.raw(), r.v.raw(), MPFR_RNDN);
  mpfr_ui_div(r.t.raw(), 1, r.w.raw(), MPFR_RNDN);
  if (mpfr_sgn(r.u.raw()) < 0) mpfr_neg(r.t.raw(), r.t.raw(), MPFR_RNDN);
  mpfr_sqr(r.v.raw(), r.t.raw(), MPFR_RNDN);
  mpfr_add_ui(r.v.raw(), r.v.raw(), 1, MPFR_RNDN);
  mpfr_rec_sqrt(r.c.raw(), r.v.raw(), MPFR_RNDN);
  mpfr_mul(r.s.raw(), r.c.raw(), r.t.raw(), MPFR_RNDN);
}

// x' = c x - s y, y' = s x + c y, elementwise.
void rotate_pair(Scratch& r, Real& x, Real& y) {
  mpfr_mul(r.a.raw(), r.c.raw(), x.raw(), MPFR_RNDN);
  mpfr_mul(r.b.raw(), r.s.raw(), y.raw(), MPFR_RNDN);
  mpfr_mul(r.u.raw(), r.s.raw(), x.raw(), MPFR_RNDN);
  mpfr_sub(x.raw(), r.a.raw(), r.b.raw(), MPFR_RNDN);
  mpfr_fma(y.raw(), r.c.raw(), y.raw(), r.u.raw(), MPFR_RNDN);
}

struct SvdOutcome {
  std::vector<Real> values;
  int sweeps = 0;
};

// One-sided (Hestenes) Jacobi: orthogonalise the columns of A; the column
// norms are the singular values.
SvdOutcome one_sided_jacobi(std::vector<std::vector<Real>> cols, Precision bits,
                            int max_sweeps) {
  const std::size_t n = cols.size();
  Scratch r(bits);
  Real gamma(bits), bound(bits);
  const Real threshold = Real::pow2(-(bits - 8), bits);
  std::vector<Real> norms(n, Real(bits));
  SvdOutcome out;
  for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
    for (std::size_t j = 0; j < n; ++j) dot_into(norms[j], cols[j], cols[j]);
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (norms[p].is_zero() || norms[q].is_zero()) continue;
        dot_into(gamma, cols[p], cols[q]);
        mpfr_mul(bound.raw(), norms[p].raw(), norms[q].raw(), MPFR_RNDN);
        mpfr_sqrt(bound.raw(), bound.raw(), MPFR_RNDN);
        mpfr_mul(bound.raw(), bound.raw(), threshold.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(gamma.raw(), bound.raw()) <= 0) continue;
        rotated = true;
        rotation(r, norms[p], norms[q], gamma);
        for (std::size_t i = 0; i < n; ++i) rotate_pair(r, cols[p][i], cols[q][i]);
        dot_into(norms[p], cols[p], cols[p]);
        dot_into(norms[q], cols[q], cols[q]);
      }
    }
    if (!rotated) {
      for (auto& v : norms) v = sqrt(v);
      out.values = std::move(norms);
      return out;
    }
  }
  throw NumericalError("one-sided Jacobi did not converge in " + std::to_string(max_sweeps) +
                       " sweeps");
}

struct EigenOutcome {
  std::vector<Real> values;
  int sweeps = 0;
};

// Cyclic Jacobi eigenvalues of a real symmetric matrix (row-major).
EigenOutcome symmetric_jacobi(Matrix<Real> a, Precision bits, int max_sweeps) {
  const std::size_t n = a.rows();
  Scratch r(bits);
  Real bound(bits), frob(bits);
  const Real threshold = Real::pow2(-(bits - 8), bits);
  for (const auto& x : a.data()) mpfr_fma(frob.raw(), x.raw(), x.raw(), frob.raw(), MPFR_RNDN);
  mpfr_sqrt(frob.raw(), frob.raw(), MPFR_RNDN);
  const Real absolute_floor = frob * Real::pow2(-(2 * bits), bits);
  EigenOutcome out;
  for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Real& apq = a(p, q);
        if (apq.is_zero()) continue;
        mpfr_mul(bound.raw(), a(p, p).raw(), a(q, q).raw(), MPFR_RNDN);
        mpfr_abs(bound.raw(), bound.raw(), MPFR_RNDN);
        mpfr_sqrt(bound.raw(), bound.raw(), MPFR_RNDN);
        mpfr_mul(bound.raw(), bound.raw(), threshold.raw(), MPFR_RNDN);
        if (mpfr_cmpabs(apq.raw(), bound.raw()) <= 0 ||
            mpfr_cmpabs(apq.raw(), absolute_floor.raw()) <= 0) {
          continue;
        }
        rotated = true;
        Real gamma = apq;
        rotation(r, a(p, p), a(q, q), gamma);
        // A <- J^T A J with J acting on columns p, q (then rows).
        for (std::size_t k = 0; k < n; ++k) rotate_pair(r, a(k, p), a(k, q));
        for (std::size_t k = 0; k < n; ++k) rotate_pair(r, a(p, k), a(q, k));
        mpfr_set_zero(a(p, q).raw(), 1);
        mpfr_set_zero(a(q, p).raw(), 1);
      }
    }
    if (!rotated) {
      for (std::size_t i = 0; i < n; ++i) out.values.push_back(a(i, i));
      return out;
    }
  }
  throw NumericalError("symmetric Jacobi did not converge in " + std::to_string(max_sweeps) +
                       " sweeps");
}

std::vector<std::size_t> descending_order(const std::vector<Real>& keys) {
  std::vector<std::size_t> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
  return idx;
}

Real frobenius(const QncMatrix& m) { return sqrt(hs_norm_sq(m)); }

}  // namespace

SpectrumResult singular_values(const QncMatrix& m, int max_sweeps) {
  const std::size_t n = m.n();
  const Precision bits = m.precision();
  SpectrumResult out;
  out.source_dim = n;
  out.solver_tolerance =
      frobenius(m) * Real::pow2(-(bits - 8), bits) * static_cast<long>(n + 1);

  if (!m.is_complex()) {
    out.structure = SpectrumStructure::real_skew;
    std::vector<std::vector<Real>> cols(n, std::vector<Real>(n, Real(bits)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cols[j][i] = m.re(i, j);
    }
    SvdOutcome svd = one_sided_jacobi(std::move(cols), bits, max_sweeps);
    out.sweeps = svd.sweeps;
    for (std::size_t k : descending_order(svd.values)) out.lambdas.push_back(svd.values[k]);

    const Real floor = out.solver_tolerance * 10L;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
      const Real& hi = out.lambdas[k];
      const Real& lo = out.lambdas[k + 1];
      out.signed_eigenvalues.push_back(hi);
      out.signed_eigenvalues.push_back(-lo);
      if (lo > floor) {
        out.pairing_defect = std::max(out.pairing_defect, (hi / lo - 1L).to_double());
      }
    }
    if (n % 2 == 1) out.signed_eigenvalues.push_back(Real(bits));
    return out;
  }

  // iR = B + iC is Hermitian with B = -Im R, C = Re R; embed as [[B, -C], [C, B]].
  out.structure = SpectrumStructure::skew_hermitian;
  Matrix<Real> embed(2 * n, 2 * n, Real(bits));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Real b = -m.im(i, j);
      const Real& c = m.re(i, j);
      embed(i, j) = b;
      embed(i + n, j + n) = b;
      embed(i, j + n) = -c;
      embed(i + n, j) = c;
    }
  }
  EigenOutcome eig = symmetric_jacobi(std::move(embed), bits, max_sweeps);
  out.sweeps = eig.sweeps;
  // Each eigenvalue of iR appears twice in the embedding.
  std::vector<Real> sorted;
  for (std::size_t k : descending_order(eig.values)) sorted.push_back(eig.values[k]);
  std::vector<Real> mu;  // eigenvalues of iR; R has eigenvalues -i mu
  for (std::size_t k = 0; k < sorted.size(); k += 2) mu.push_back(-sorted[k]);
  std::vector<Real> moduli;
  for (const auto& x : mu) moduli.push_back(abs(x));
  std::vector<std::size_t> order(mu.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (moduli[a] != moduli[b]) return moduli[a] > moduli[b];
    return mu[a].sign() > mu[b].sign();
  });
  for (std::size_t k : order) {
    out.signed_eigenvalues.push_back(mu[k]);
    out.lambdas.push_back(moduli[k]);
  }
  return out;
}

Complex det_from_spectrum(const SpectrumResult& s, const Complex& w) {
  const Precision bits = std::max(w.precision(), s.solver_tolerance.precision());
  Complex det(Real(1L, bits), Real(bits));
  if (s.structure == SpectrumStructure::real_skew) {
    const Complex w2 = w * w;
    for (std::size_t k = 0; k + 1 < s.lambdas.size(); k += 2) {
      Complex factor = w2 * (s.lambdas[k] * s.lambdas[k + 1]);
      factor.re += Real(1L, bits);
      det *= factor;
    }
    return det;
  }
  for (const Real& mu : s.signed_eigenvalues) {
    // 1 - w (i mu) = (1 + mu Im w) - i (mu Re w)
    Complex factor(Real(1L, bits) + mu * w.im, -(mu * w.re));
    det *= factor;
  }
  return det;
}

Complex det2_from_spectrum(const SpectrumResult& s, const Complex& w) {
  const Precision bits = std::max(w.precision(), s.solver_tolerance.precision());
  Complex det(Real(1L, bits), Real(bits));
  for (const Real& mu : s.signed_eigenvalues) {
    Complex wz(-(mu * w.im), mu * w.re);  // w * (i mu)
    Complex factor(Real(1L, bits) - wz.re, -wz.im);
    det *= factor * exp(wz);
  }
  return det;
}

namespace {

template <typename T>
T zero_like(Precision bits);

template <>
Real zero_like<Real>(Precision bits) {
  return Real(bits);
}

template <>
Complex zero_like<Complex>(Precision bits) {
  return Complex(bits);
}

Complex to_complex(const Real& x) { return Complex(x); }
Complex to_complex(const Complex& z) { return z; }

template <typename T>
std::vector<Complex> newton_coefficients(const Matrix<T>& a, std::size_t order,
                                         Precision bits) {
  const std::size_t n = a.rows();
  std::vector<T> power_sums(order + 1, zero_like<T>(bits));
  Matrix<T> power = a;
  for (std::size_t k = 1; k <= order; ++k) {
    if (k > 1) {
      Matrix<T> next(n, n, zero_like<T>(bits));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
          if (power(i, l).is_zero()) continue;
          for (std::size_t j = 0; j < n; ++j) next(i, j) += power(i, l) * a(l, j);
        }
      }
      power = std::move(next);
    }
    for (std::size_t i = 0; i < n; ++i) power_sums[k] += power(i, i);
  }
  // e_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i;  c_k = (-1)^k e_k.
  std::vector<Complex> coeffs;
  coeffs.reserve(order + 1);
  Complex one(Real(1L, bits), Real(bits));
  std::vector<Complex> ec(order + 1, Complex(bits));
  ec[0] = one;
  coeffs.push_back(one);
  for (std::size_t k = 1; k <= order; ++k) {
    Complex acc(bits);
    for (std::size_t i = 1; i <= k; ++i) {
      Complex term = ec[k - i] * to_complex(power_sums[i]);
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    ec[k] = acc / static_cast<long>(k);
    coeffs.push_back(k % 2 == 0 ? ec[k] : -ec[k]);
  }
  return coeffs;
}

}  // namespace

DeterminantSeries det_series_coeffs(const QncMatrix& m, std::optional<std::size_t> order) {
  const std::size_t n = m.n();
  const std::size_t k = order.value_or(n);
  if (k > n) {
    throw DomainError("determinant series order " + std::to_string(k) +
                      " exceeds dimension " + std::to_string(n));
  }
  const Precision bits = m.precision();
  DeterminantSeries out;
  out.order = k;
  if (m.is_complex()) {
    Matrix<Complex> a(n, n, Complex(bits));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = m.entry(i, j);
    }
    out.coeffs = newton_coefficients(a, k, bits);
  } else {
    Matrix<Real> a(n, n, Real(bits));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = m.re(i, j);
    }
    out.coeffs = newton_coefficients(a, k, bits);
  }
  return out;
}

Complex evaluate(const DeterminantSeries& series, const Complex& w) {
  Complex acc(w.precision());
  for (auto it = series.coeffs.rbegin(); it != series.coeffs.rend(); ++it) {
    acc = acc * w + *it;
  }
  return acc;
}

std::vector<Complex> sample_determinant(const SpectrumResult& s, std::span<const Complex> ws) {
  std::vector<Complex> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(det_from_spectrum(s, w));
  return out;
}

}  // namespace qnc

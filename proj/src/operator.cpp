#include "qnc/operator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "qnc/errors.hpp"
#include "qnc/pairing.hpp"

namespace qnc {

std::string_view to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::standard:
      return "standard";
    case VariantKind::modified:
      return "modified";
    case VariantKind::weighted:
      return "weighted";
  }
  return "standard";
}

VariantKind parse_variant_kind(std::string_view text) {
  if (text == "standard") return VariantKind::standard;
  if (text == "modified") return VariantKind::modified;
  if (text == "weighted") return VariantKind::weighted;
  throw DomainError("unknown variant '" + std::string(text) +
                    "' (expected standard, modified or weighted)");
}

Real QncMatrix::im(std::size_t i, std::size_t j) const {
  if (imag_.empty()) return Real(precision_);
  return imag_[i * n_ + j];
}

Real QncMatrix::modulus(std::size_t i, std::size_t j) const {
  if (imag_.empty()) return abs(re(i, j));
  return abs(entry(i, j));
}

QncMatrix build_matrix(std::size_t n, const Variant& variant, Precision bits,
                       std::size_t cap) {
  if (n == 0) throw ResourceError("matrix dimension must be at least 1");
  if (n > cap) {
    throw ResourceError("matrix dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }
  if (variant.kind == VariantKind::weighted && !variant.character) {
    throw DomainError("weighted variant needs a character table");
  }
  QncMatrix m;
  m.n_ = n;
  m.variant_ = variant;
  m.precision_ = bits;
  m.primes_ = first_primes(n, cap).primes;
  m.real_.assign(n * n, Real(bits));
  const bool weighted = variant.kind == VariantKind::weighted;
  if (weighted) m.imag_.assign(n * n, Real(bits));

  for (std::size_t i = 0; i < n; ++i) {
    const Real x(m.primes_[i], bits);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Real y(m.primes_[j], bits);
      Real base = qnc(x, y);
      if (variant.kind == VariantKind::modified) {
        base += tilde_correction(m.primes_[i], m.primes_[j], bits);
      }
      if (weighted) {
        Complex w = weighted_entry(*variant.character, m.primes_[i], m.primes_[j], base,
                                   /*allow_zero_weights=*/true);
        // Skew-Hermitian mirror: R_ji = -conj(R_ij).
        m.real_[j * n + i] = -w.re;
        m.imag_[j * n + i] = w.im;
        m.real_[i * n + j] = std::move(w.re);
        m.imag_[i * n + j] = std::move(w.im);
      } else {
        m.real_[j * n + i] = -base;
        m.real_[i * n + j] = std::move(base);
      }
    }
  }
  m.tail_ = tail_bound(n, variant.kind, bits);
  return m;
}

Real entry_abs_sum(const QncMatrix& m) {
  Real sum(m.precision());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) sum += m.modulus(i, j);
  }
  return sum;
}

Real hs_norm_sq(const QncMatrix& m) {
  Real sum(m.precision());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      sum += m.re(i, j) * m.re(i, j);
      if (m.is_complex()) {
        Real b = m.im(i, j);
        sum += b * b;
      }
    }
  }
  return sum;
}

TailBound tail_bound(std::size_t n, VariantKind kind, Precision bits) {
  if (kind == VariantKind::modified) return TailBound::infinite(bits);

  const PrimeTable head = first_primes(n + 1, std::max(dimension_cap(), n + 1));
  const long last_in = n == 0 ? 1 : head[n - 1];  // p_n
  const long first_out = head[n];                  // p_{n+1}
  const long horizon = std::max(10 * last_in, 1000L);
  const PrimeTable all = primes_up_to(horizon);
  const Real negligible = Real::pow2(-(bits + 8), bits);

  Real total(bits);
  // Bases p_i with i > n, any prime exponent p_j != p_i, up to the horizon.
  for (long a : all.primes) {
    if (a <= last_in) continue;
    const Real base(a, bits);
    Real partial(bits);
    bool closed = false;
    for (long b : all.primes) {
      if (b == a) continue;
      partial += pow(base, -b);
      // sum over all integers e > b of a^-e
      Real rest = pow(base, -(b + 1)) * a / (a - 1);
      if (rest <= negligible * partial) {
        partial += rest;
        closed = true;
        break;
      }
    }
    if (!closed) partial += pow(base, -(horizon + 1)) * a / (a - 1);
    total += partial;
  }
  // Integer bases a > H: sum_{a>H} sum_{e>=2} a^-e = sum_{a>H} 1/(a(a-1)) = 1/H.
  total += Real(1L, bits) / horizon;
  // Bases p_i with i <= n, exponents p_j > p_n: geometric over integers >= p_{n+1}.
  for (std::size_t i = 0; i < n; ++i) {
    const long a = head[i];
    total += pow(Real(a, bits), -first_out) * a / (a - 1);
  }
  // Round-off allowance for the sums above.
  total *= Real(1L, bits) + Real::pow2(-(bits - 16), bits);
  return {false, std::move(total)};
}

Real basis_criterion_check(const QncMatrix& m, const Matrix<Complex>& basis) {
  const std::size_t n = m.n();
  if (basis.rows() != n || basis.cols() != n) {
    throw ValidationError("basis must be " + std::to_string(n) + " x " + std::to_string(n));
  }
  const Precision prec = m.precision();
  const Real tol = Real::pow2(-prec / 2, prec);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      Complex dot(prec);
      for (std::size_t i = 0; i < n; ++i) dot += conj(basis(i, k)) * basis(i, l);
      if (k == l) dot.re -= Real(1L, prec);
      if (abs(dot) > tol) {
        throw ValidationError("basis columns are not orthonormal (column pair " +
                              std::to_string(k) + ", " + std::to_string(l) + ")");
      }
    }
  }
  Real total(prec);
  for (std::size_t k = 0; k < n; ++k) {
    Complex form(prec);
    for (std::size_t i = 0; i < n; ++i) {
      Complex row(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        row += m.entry(i, j) * basis(j, k);
      }
      form += row * conj(basis(i, k));
    }
    total += abs(form);
  }
  return total;
}

Matrix<Complex> random_unitary(std::size_t n, std::uint64_t seed, Precision bits) {
  std::mt19937_64 gen(seed);
  auto uniform = [&gen]() {
    // 53 random bits mapped to [-1, 1); independent of libstdc++ distributions.
    return static_cast<double>(gen() >> 11) * 0x1p-52 - 1.0;
  };
  Matrix<Complex> q(n, n, Complex(bits));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double re = uniform();
      double im = uniform();
      q(i, j) = Complex(re, im, bits);
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t l = 0; l < k; ++l) {
        Complex proj(bits);
        for (std::size_t i = 0; i < n; ++i) proj += conj(q(i, l)) * q(i, k);
        for (std::size_t i = 0; i < n; ++i) q(i, k) -= proj * q(i, l);
      }
      Real len(bits);
      for (std::size_t i = 0; i < n; ++i) len += norm(q(i, k));
      len = sqrt(len);
      for (std::size_t i = 0; i < n; ++i) {
        q(i, k).re /= len;
        q(i, k).im /= len;
      }
    }
  }
  return q;
}

}  // namespace qnc

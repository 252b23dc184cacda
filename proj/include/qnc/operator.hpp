#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnc/character.hpp"
#include "qnc/complex.hpp"
#include "qnc/matrix.hpp"
#include "qnc/primes.hpp"
#include "qnc/real.hpp"

namespace qnc {

enum class VariantKind { standard, modified, weighted };

std::string_view to_string(VariantKind kind);
VariantKind parse_variant_kind(std::string_view text);  // throws DomainError

struct Variant {
  VariantKind kind = VariantKind::standard;
  std::optional<CharacterTable> character;  // set iff kind == weighted

  static Variant standard() { return {}; }
  static Variant modified() { return {VariantKind::modified, std::nullopt}; }
  static Variant weighted(CharacterTable chi) { return {VariantKind::weighted, std::move(chi)}; }
};

// Upper bound on the omitted part of sum |R_ij|. `divergent` marks the
// modified operator, whose entry sum is infinite.
struct TailBound {
  bool divergent = false;
  Real value;

  static TailBound infinite(Precision bits) { return {true, Real::infinity(bits)}; }
};

// Dense n x n truncation of R (standard), R~ (modified) or R(chi)
// (weighted). Antisymmetry is structural: entries are computed for i < j
// and mirrored, the diagonal is exactly zero. Immutable once built.
class QncMatrix {
 public:
  std::size_t n() const noexcept { return n_; }
  const Variant& variant() const noexcept { return variant_; }
  VariantKind kind() const noexcept { return variant_.kind; }
  const std::vector<long>& primes() const noexcept { return primes_; }
  Precision precision() const noexcept { return precision_; }
  const TailBound& tail_bound() const noexcept { return tail_; }

  bool is_complex() const noexcept { return !imag_.empty(); }

  const Real& re(std::size_t i, std::size_t j) const { return real_[i * n_ + j]; }
  // Zero for real variants.
  Real im(std::size_t i, std::size_t j) const;
  Complex entry(std::size_t i, std::size_t j) const { return {re(i, j), im(i, j)}; }
  Real modulus(std::size_t i, std::size_t j) const;

 private:
  friend QncMatrix build_matrix(std::size_t, const Variant&, Precision, std::size_t);

  QncMatrix() = default;

  std::size_t n_ = 0;
  Variant variant_;
  std::vector<long> primes_;
  Precision precision_ = kDefaultPrecision;
  std::vector<Real> real_;  // row-major n x n
  std::vector<Real> imag_;  // empty unless weighted
  TailBound tail_;
};

// entries[i][j] = qnc(p_i, p_j) for i < j, plus tilde_correction for the
// modified variant, times (chi(p_i) + conj chi(p_j))/2 for the weighted one.
// Primes dividing the character modulus get weight chi(p) = 0. Throws
// ResourceError when n is 0 or exceeds `cap`.
QncMatrix build_matrix(std::size_t n, const Variant& variant,
                       Precision bits = kDefaultPrecision, std::size_t cap = dimension_cap());

Real entry_abs_sum(const QncMatrix& m);
Real hs_norm_sq(const QncMatrix& m);

// Rigorous bound on the sum of (p_i^-p_j + p_j^-p_i)/2 over ordered pairs
// i != j with max(i, j) > n: explicit sums over primes up to a horizon
// H = max(10 p_n, 1000), integer majorants beyond it. Weighted entries have
// |weight| <= 1 and share the standard bound; modified is divergent.
TailBound tail_bound(std::size_t n, VariantKind kind, Precision bits = kDefaultPrecision);

// sum_k |<R phi_k, phi_k>| over the columns phi_k of `basis`. Throws
// ValidationError unless the columns are orthonormal to 2^-(prec/2).
Real basis_criterion_check(const QncMatrix& m, const Matrix<Complex>& basis);

// Seeded Haar-like unitary: uniform complex entries, Gram-Schmidt twice.
Matrix<Complex> random_unitary(std::size_t n, std::uint64_t seed,
                               Precision bits = kDefaultPrecision);

}  // namespace qnc

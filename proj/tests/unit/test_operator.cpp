#include "doctest.h"

#include <map>

#include "../oracles.hpp"
#include "qnc/errors.hpp"
#include "qnc/operator.hpp"
#include "qnc/pairing.hpp"
#include "qnc/spectral.hpp"

using qnc::Complex;
using qnc::Real;

namespace {

constexpr qnc::Precision kBits = 192;

qnc::CharacterTable legendre_mod5() {
  std::map<long, Complex> values;
  for (long r = 1; r < 5; ++r) {
    values.emplace(r, Complex(double(qnc::oracle::legendre_by_squares(r, 5)), 0.0, kBits));
  }
  return qnc::CharacterTable(5, values);
}

// Order-4 character mod 5 generated by chi(2) = i.
qnc::CharacterTable quartic_mod5() {
  std::map<long, Complex> values;
  values.emplace(1, Complex(1.0, 0.0, kBits));
  values.emplace(2, Complex(0.0, 1.0, kBits));
  values.emplace(4, Complex(-1.0, 0.0, kBits));
  values.emplace(3, Complex(0.0, -1.0, kBits));
  return qnc::CharacterTable(5, values);
}

}  // namespace

TEST_SUITE("operator") {
  TEST_CASE("standard truncation entries") {
    auto m = qnc::build_matrix(8, qnc::Variant::standard());
    REQUIRE(m.n() == 8);
    CHECK_FALSE(m.is_complex());
    CHECK_FALSE(m.tail_bound().divergent);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(m.re(i, i).is_zero());
      for (std::size_t j = 0; j < 8; ++j) {
        CHECK(m.re(i, j) == -m.re(j, i));
        CHECK(m.im(i, j).is_zero());
      }
    }
    Real expected = qnc::oracle::brute_force_qnc(3, 11, 40, 384);
    CHECK(qnc::oracle::rel_diff(m.re(1, 4), expected) < 1e-50);
    CHECK(m.primes() == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
  }

  TEST_CASE("modified truncation adds the shifted-index correction") {
    auto s = qnc::build_matrix(6, qnc::Variant::standard());
    auto t = qnc::build_matrix(6, qnc::Variant::modified());
    CHECK(t.tail_bound().divergent);
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(t.re(i, i).is_zero());
      for (std::size_t j = i + 1; j < 6; ++j) {
        Real c = qnc::tilde_correction(s.primes()[i], s.primes()[j]);
        CHECK(qnc::abs(t.re(i, j) - s.re(i, j) - c) < 1e-55);
        CHECK(t.re(j, i) == -t.re(i, j));
      }
    }
  }

  TEST_CASE("principal character reproduces the standard truncation") {
    auto chi = qnc::CharacterTable::principal(1);
    auto w = qnc::build_matrix(7, qnc::Variant::weighted(chi));
    auto s = qnc::build_matrix(7, qnc::Variant::standard());
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        CHECK(qnc::abs(w.re(i, j) - s.re(i, j)) < 1e-60);
        CHECK(w.im(i, j).is_zero());
      }
    }
  }

  TEST_CASE("real character weights") {
    auto chi = legendre_mod5();
    auto w = qnc::build_matrix(8, qnc::Variant::weighted(chi));
    auto s = qnc::build_matrix(8, qnc::Variant::standard());
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        long pi = s.primes()[i], pj = s.primes()[j];
        double weight = (qnc::oracle::legendre_by_squares(pi, 5) +
                         qnc::oracle::legendre_by_squares(pj, 5)) / 2.0;
        CAPTURE(pi);
        CAPTURE(pj);
        CHECK(qnc::abs(w.re(i, j) - s.re(i, j) * Real(weight, kBits)) < 1e-60);
      }
    }
  }

  TEST_CASE("complex character gives a skew-Hermitian truncation") {
    auto w = qnc::build_matrix(9, qnc::Variant::weighted(quartic_mod5()));
    CHECK(w.is_complex());
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        Complex a = w.entry(i, j), b = w.entry(j, i);
        CHECK(qnc::abs(a + qnc::conj(b)) < 1e-60);
      }
    }
    // chi(2) = i, chi(3) = -i: weight (i + i) / 2 = i
    Complex expected = Complex(0.0, 1.0, kBits) * Complex(qnc::qnc(Real(2L, kBits), Real(3L, kBits)));
    CHECK(qnc::abs(w.entry(0, 1) - expected) < 1e-60);
    // chi(7) = chi(2): the weight cancels
    CHECK(qnc::abs(w.entry(0, 3)) < 1e-60);
  }

  TEST_CASE("invalid characters are rejected") {
    std::map<long, Complex> bad;
    bad.emplace(1, Complex(1.0, 0.0, kBits));
    bad.emplace(2, Complex(1.0, 0.0, kBits));
    bad.emplace(3, Complex(-1.0, 0.0, kBits));
    bad.emplace(4, Complex(1.0, 0.0, kBits));
    CHECK_THROWS_AS(qnc::CharacterTable(5, bad), qnc::ValidationError);

    std::map<long, Complex> not_unit{{1, Complex(1.0, 0.0, kBits)}, {2, Complex(0.5, 0.0, kBits)}};
    CHECK_THROWS_AS(qnc::CharacterTable(3, not_unit), qnc::ValidationError);

    std::map<long, Complex> nonzero_on_shared{{1, Complex(1.0, 0.0, kBits)},
                                              {2, Complex(1.0, 0.0, kBits)},
                                              {3, Complex(1.0, 0.0, kBits)}};
    CHECK_THROWS_AS(qnc::CharacterTable(4, nonzero_on_shared), qnc::ValidationError);
  }

  TEST_CASE("weighted entry helper refuses vanishing weights unless allowed") {
    auto chi = legendre_mod5();
    Real base(1L, kBits);
    CHECK_THROWS_AS(qnc::weighted_entry(chi, 5, 7, base), qnc::ValidationError);
    Complex z = qnc::weighted_entry(chi, 5, 11, base, true);
    CHECK(qnc::abs(z.re - Real(1L, kBits) / 2L) < 1e-60);
  }

  TEST_CASE("aggregates") {
    auto m = qnc::build_matrix(10, qnc::Variant::standard());
    Real abs_sum(kBits), hs(kBits);
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = 0; j < 10; ++j) {
        abs_sum += qnc::abs(m.re(i, j));
        hs += m.re(i, j) * m.re(i, j);
      }
    }
    CHECK(qnc::oracle::rel_diff(qnc::entry_abs_sum(m), abs_sum) < 1e-50);
    CHECK(qnc::oracle::rel_diff(qnc::hs_norm_sq(m), hs) < 1e-50);
    // 2 |qnc(2,3)| is the largest single contribution
    CHECK(qnc::entry_abs_sum(m) > 2L * qnc::abs(m.re(0, 1)));
  }

  TEST_CASE("entry sums grow and are dominated by the tail bound") {
    auto big = qnc::entry_abs_sum(qnc::build_matrix(200, qnc::Variant::standard()));
    Real previous(kBits);
    Real previous_tail = Real::infinity(kBits);
    const Real majorant = qnc::oracle::majorant_double_sum(256);
    for (std::size_t n : {1, 2, 5, 10, 25, 50, 100}) {
      CAPTURE(n);
      Real sum = qnc::entry_abs_sum(qnc::build_matrix(n, qnc::Variant::standard()));
      qnc::TailBound tail = qnc::tail_bound(n, qnc::VariantKind::standard);
      CHECK_FALSE(tail.divergent);
      CHECK(sum >= previous);
      CHECK(tail.value <= previous_tail);
      CHECK(big - sum <= tail.value);
      CHECK(sum + tail.value <= majorant);
      previous = sum;
      previous_tail = tail.value;
    }
    CHECK(qnc::tail_bound(0, qnc::VariantKind::standard).value <= majorant);
    CHECK(qnc::tail_bound(25, qnc::VariantKind::modified).divergent);
    CHECK(qnc::tail_bound(25, qnc::VariantKind::weighted).value ==
          qnc::tail_bound(25, qnc::VariantKind::standard).value);
  }

  TEST_CASE("dimension limits") {
    CHECK_THROWS_AS(qnc::build_matrix(0, qnc::Variant::standard()), qnc::ResourceError);
    CHECK_THROWS_AS(qnc::build_matrix(20, qnc::Variant::standard(), kBits, 10),
                    qnc::ResourceError);
  }

  TEST_CASE("variant names") {
    CHECK(qnc::parse_variant_kind("modified") == qnc::VariantKind::modified);
    CHECK(qnc::to_string(qnc::VariantKind::weighted) == "weighted");
    CHECK_THROWS_AS(qnc::parse_variant_kind("tilde"), qnc::DomainError);
  }

  TEST_CASE("basis criterion") {
    auto m = qnc::build_matrix(8, qnc::Variant::standard());
    qnc::Matrix<Complex> identity(8, 8, Complex(kBits));
    for (std::size_t i = 0; i < 8; ++i) identity(i, i) = Complex(Real(1L, kBits));
    CHECK(qnc::basis_criterion_check(m, identity).is_zero());

    auto u = qnc::random_unitary(8, 7);
    auto v = qnc::random_unitary(8, 7);
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) CHECK(u(i, j).re == v(i, j).re);
    }
    Real value = qnc::basis_criterion_check(m, u);
    Real trace_norm(kBits);
    for (const auto& l : qnc::singular_values(m).lambdas) trace_norm += l;
    CHECK(value > 0L);
    CHECK(value <= trace_norm + Real::pow2(-150, kBits));

    qnc::Matrix<Complex> skewed = identity;
    skewed(0, 1) = Complex(0.5, 0.0, kBits);
    CHECK_THROWS_AS(qnc::basis_criterion_check(m, skewed), qnc::ValidationError);
  }
}

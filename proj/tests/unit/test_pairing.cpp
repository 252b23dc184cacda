#include "doctest.h"

#include <cmath>
#include <vector>

#include "../oracles.hpp"
#include "qnc/errors.hpp"
#include "qnc/pairing.hpp"
#include "qnc/primes.hpp"

using qnc::Real;

namespace {

Real R(long v, qnc::Precision bits = qnc::kDefaultPrecision) { return Real(v, bits); }

}  // namespace

TEST_SUITE("pairing") {
  TEST_CASE("qnc(2, 3) against direct summation at 512 bits") {
    Real expected = qnc::oracle::brute_force_qnc(2, 3, 80, 512);
    Real got = qnc::qnc(R(2, 512), R(3, 512));
    CHECK(qnc::oracle::rel_diff(got, expected) < 1e-140);
    CHECK(qnc::oracle::leading_digits(got, 12) == "220481984439");
  }

  TEST_CASE("qnc(2, 5) and qnc(3, 5) against external references") {
    // mpmath at 50 digits
    CHECK(qnc::oracle::leading_digits(qnc::qnc(R(2), R(5)), 20) == "17207689901581044149");
    CHECK(qnc::oracle::leading_digits(qnc::qnc(R(3), R(5)), 15) == "311555528553148");
  }

  TEST_CASE("default precision agrees with direct summation on a prime grid") {
    auto primes = qnc::first_primes(12).primes;
    for (long p : primes) {
      for (long q : primes) {
        if (p == q) continue;
        Real expected = qnc::oracle::brute_force_qnc(p, q, 40, 384);
        Real got = qnc::qnc(R(p), R(q));
        CAPTURE(p);
        CAPTURE(q);
        CHECK(qnc::oracle::rel_diff(got, expected) < 1e-50);
      }
    }
  }

  TEST_CASE("diagonal is exactly zero") {
    CHECK(qnc::qnc(R(7), R(7)).is_zero());
    Real x("2.75", 192);
    CHECK(qnc::qnc(x, x).is_zero());
  }

  TEST_CASE("antisymmetry") {
    auto primes = qnc::first_primes(25).primes;
    const Real limit = Real::pow2(-96, 192);
    for (long p : primes) {
      for (long q : primes) {
        Real s = qnc::qnc(R(p), R(q)) + qnc::qnc(R(q), R(p));
        CHECK(qnc::abs(s) <= limit);
      }
    }
    Real a("2.5", 192), b("3.75", 192);
    CHECK(qnc::abs(qnc::qnc(a, b) + qnc::qnc(b, a)) <= limit);
  }

  TEST_CASE("sign follows the smaller argument") {
    CHECK(qnc::qnc(R(2), R(3)).sign() > 0);
    CHECK(qnc::qnc(R(3), R(2)).sign() < 0);
    CHECK(qnc::qnc(R(5), R(11)).sign() > 0);
  }

  TEST_CASE("entries sit below the pair bound") {
    auto primes = qnc::first_primes(25).primes;
    for (long p : primes) {
      for (long q : primes) {
        CAPTURE(p);
        CAPTURE(q);
        Real v = qnc::abs(qnc::qnc(R(p), R(q)));
        Real bound = qnc::qnc_bound(p, q);
        Real direct = (qnc::pow(R(p), -q) + qnc::pow(R(q), -p)) / 2L;
        CHECK(qnc::oracle::rel_diff(bound, direct) < 1e-50);
        CHECK(v <= bound);
      }
    }
  }

  TEST_CASE("F is dominated by 6 q^-p with denominators above 9/16") {
    auto primes = qnc::first_primes(10).primes;
    const Real nine_sixteenths = Real(9L, 192) / 16L;
    for (long p : primes) {
      for (long q : primes) {
        CAPTURE(p);
        CAPTURE(q);
        qnc::SeriesValue f = qnc::eval_F(R(p), R(q), 1e-40);
        CHECK(f.value + f.truncation_error <= 6L * qnc::pow(R(q), -p));
        CHECK(f.min_denominator >= nine_sixteenths);
        CHECK(f.terms_used >= 1);
      }
    }
  }

  TEST_CASE("truncated series enclose the full value") {
    Real x = R(2), y = R(3);
    qnc::SeriesValue full = qnc::eval_F(x, y, 1e-55);
    Real previous(192);
    for (int k = 1; k <= 7; ++k) {
      qnc::SeriesValue part = qnc::eval_F_terms(x, y, k);
      CAPTURE(k);
      CHECK(part.value >= previous);
      CHECK(part.value <= full.value);
      CHECK(full.value - part.value <= part.truncation_error + Real::pow2(-185, 192));
      previous = part.value;
    }
    Real direct = qnc::oracle::brute_force_F(2, 3, 80, 192);
    CHECK(qnc::abs(full.value - direct) <= full.truncation_error + Real::pow2(-180, 192));
  }

  TEST_CASE("truncation error honours the requested tolerance") {
    for (double tol : {1e-6, 1e-20, 1e-45}) {
      qnc::SeriesValue f = qnc::eval_F(R(3), R(2), tol);
      CHECK(f.truncation_error <= f.value * Real(tol, 192));
    }
  }

  TEST_CASE("non-integer arguments") {
    Real x("1.5", 192), y("2.25", 192);
    qnc::QncValue v = qnc::qnc_evaluate(x, y);
    CHECK(v.value.is_finite());
    CHECK(v.abs_error < qnc::abs(v.value) * Real("1e-50", 192));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(qnc::eval_F(R(1), R(3), 1e-10), qnc::DomainError);
    CHECK_THROWS_AS(qnc::eval_F(R(3), R(1), 1e-10), qnc::DomainError);
    CHECK_THROWS_AS(qnc::eval_F(R(2), R(3), 0.0), qnc::DomainError);
    CHECK_THROWS_AS(qnc::eval_F(R(2), R(3), 1.0), qnc::DomainError);
    CHECK_THROWS_AS(qnc::qnc(Real("0.5", 192), R(3)), qnc::DomainError);
  }

  TEST_CASE("bound in log space for large primes") {
    const long p = 10007, q = 10009;
    Real lb = qnc::qnc_bound_log2(p, q);
    double a = -q * std::log2(double(p));
    double b = -p * std::log2(double(q));
    double hi = std::max(a, b), lo = std::min(a, b);
    double expected = hi + std::log2(1.0 + std::exp2(lo - hi)) - 1.0;
    CHECK(lb.to_double() == doctest::Approx(expected).epsilon(1e-12));
    Real b2 = qnc::qnc_bound(p, q);
    CHECK_FALSE(b2.is_zero());
    CHECK(qnc::log2(b2).to_double() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(qnc::qnc_bound_log2(2, 3).to_double() ==
          doctest::Approx(std::log2((1.0 / 8 + 1.0 / 9) / 2)).epsilon(1e-14));
  }

  TEST_CASE("shifted-index correction") {
    Real c = qnc::tilde_correction(2, 3);
    CHECK(qnc::abs(c + Real(1L, 192) / 144L) < 1e-55);
    Real d = qnc::tilde_correction(3, 2);
    CHECK(qnc::abs(c + d) < 1e-55);
  }
}

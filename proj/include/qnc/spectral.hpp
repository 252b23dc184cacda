#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qnc/complex.hpp"
#include "qnc/operator.hpp"
#include "qnc/real.hpp"

namespace qnc {

enum class SpectrumStructure {
  real_skew,       // eigenvalues +-i lambda_j, singular values in equal pairs
  skew_hermitian,  // eigenvalues i mu_j with independent signs
};

struct SpectrumResult {
  // Singular values, descending; ties keep solver order.
  std::vector<Real> lambdas;
  // Eigenvalues are i * signed_eigenvalues[k]; ordered by modulus, then
  // positive first. For real_skew sources pair k contributes
  // +lambdas[2k], -lambdas[2k+1]; an odd trailing value is the structural zero.
  std::vector<Real> signed_eigenvalues;
  // Largest lambda_{2k}/lambda_{2k+1} - 1 over pairs above 10x tolerance
  // (real_skew only; 0 otherwise).
  double pairing_defect = 0.0;
  std::size_t source_dim = 0;
  // Absolute error bound on each singular value.
  Real solver_tolerance;
  SpectrumStructure structure = SpectrumStructure::real_skew;
  int sweeps = 0;
};

// Standard/modified: one-sided Jacobi SVD of R at the matrix precision.
// Weighted: cyclic Jacobi on the real symmetric embedding of the Hermitian
// matrix iR. Throws NumericalError after max_sweeps without convergence.
SpectrumResult singular_values(const QncMatrix& m, int max_sweeps = 100);

// det(I - wR_N) from the spectrum: prod_k (1 + w^2 lambda_{2k} lambda_{2k+1})
// for real skew sources, prod (1 - i w mu) otherwise.
Complex det_from_spectrum(const SpectrumResult& s, const Complex& w);

// det_2(I - wR_N) = prod over eigenvalues z of (1 - w z) e^{w z}, evaluated
// factor by factor.
Complex det2_from_spectrum(const SpectrumResult& s, const Complex& w);

struct DeterminantSeries {
  std::vector<Complex> coeffs;  // c_0 .. c_K of det(I - wR_N)
  std::size_t order = 0;
};

// Coefficients from power sums tr(R^k), k <= K, through Newton's identities.
// order defaults to n. Cost is O(K n^3).
DeterminantSeries det_series_coeffs(const QncMatrix& m,
                                    std::optional<std::size_t> order = std::nullopt);

Complex evaluate(const DeterminantSeries& series, const Complex& w);

std::vector<Complex> sample_determinant(const SpectrumResult& s, std::span<const Complex> ws);

}  // namespace qnc

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qnc/operator.hpp"
#include "qnc/spectral.hpp"

namespace qnc {

// Positive ordinates gamma_1 < gamma_2 < ... of zeta zeros 1/2 + i gamma.
struct ZetaZeroTable {
  std::vector<double> ordinates;
  std::string source;

  std::size_t size() const noexcept { return ordinates.size(); }
};

// Reads one ordinate per line ('#' comments, blank lines allowed) and
// validates strict monotonicity, gamma_1 in (14, 15) and
// |#{gamma <= T} - N(T)| <= 1 at every ordinate. Throws ParseError with the
// line number, or ValidationError naming the failed check.
ZetaZeroTable load_zeros(const std::filesystem::path& path);

// Same checks on in-memory data.
void validate_zeros(const ZetaZeroTable& table);

// Riemann-von Mangoldt main term (T/2pi) log(T/2pi) - T/2pi + 7/8.
// Throws DomainError unless T > 2 pi e.
double count_estimate(double T);

// The same expression for any T > 0, used when checking the first ordinate
// (gamma_1 < 2 pi e).
double count_main_term(double T);

// sum_{j <= k} 1 / gamma_j. Throws std::out_of_range unless 1 <= k <= size.
double reciprocal_partial_sum(const ZetaZeroTable& table, std::size_t k);

struct ContradictionReport {
  std::size_t n = 0;                    // truncation dimension
  std::size_t zeros_used = 0;
  double spectrum_sum = 0.0;            // sum of lambda_j(R_n)
  double tail = 0.0;                    // tail_bound(n)
  double trace_norm_bound = 0.0;        // spectrum_sum + tail
  std::vector<double> partial_sums;     // k = 1 .. zeros_used
  std::optional<std::size_t> crossover_k;  // first k with partial sum > bound

  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Side-by-side comparison of the trace-norm bound of the full operator with
// reciprocal zero sums. The spectrum must come from a real skew source and
// the tail must be finite; DomainError otherwise.
ContradictionReport contradiction_report(const SpectrumResult& s, const TailBound& tail,
                                         const ZetaZeroTable& table);

}  // namespace qnc

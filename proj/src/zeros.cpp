#include "qnc/zeros.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qnc/errors.hpp"

namespace qnc {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double count_main_term(double T) {
  const double x = T / (2.0 * std::numbers::pi);
  return x * std::log(x) - x + 7.0 / 8.0;
}

double count_estimate(double T) {
  if (!(T > 2.0 * std::numbers::pi * std::numbers::e)) {
    throw DomainError("count_estimate requires T > 2 pi e, got " + format_double(T));
  }
  return count_main_term(T);
}

void validate_zeros(const ZetaZeroTable& table) {
  const auto& g = table.ordinates;
  if (g.empty()) throw ValidationError("zero table is empty");
  if (!(g.front() > 14.0 && g.front() < 15.0)) {
    throw ValidationError("first ordinate " + format_double(g.front()) +
                          " outside the range (14, 15)");
  }
  for (std::size_t k = 1; k < g.size(); ++k) {
    if (!(g[k] > g[k - 1])) {
      throw ValidationError("ordinates not strictly increasing at entry " +
                            std::to_string(k + 1));
    }
  }
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double count = static_cast<double>(k + 1);  // #{gamma <= gamma_k}
    const double estimate = count_main_term(g[k]);
    if (std::abs(count - estimate) > 1.0) {
      throw ValidationError("counting check failed at gamma_" + std::to_string(k + 1) + " = " +
                            format_double(g[k]) + ": count " + format_double(count) +
                            " vs estimate " + format_double(estimate));
    }
  }
}

ZetaZeroTable load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero file " + path.string(), 0);
  ZetaZeroTable table;
  table.source = path.string();
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParseError("not a decimal ordinate: '" + text + "'", line_no);
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw ParseError("ordinate must be positive and finite", line_no);
    }
    table.ordinates.push_back(value);
  }
  validate_zeros(table);
  return table;
}

double reciprocal_partial_sum(const ZetaZeroTable& table, std::size_t k) {
  if (k < 1 || k > table.size()) {
    throw std::out_of_range("partial sum index " + std::to_string(k) + " outside [1, " +
                            std::to_string(table.size()) + "]");
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < k; ++j) sum += 1.0 / table.ordinates[j];
  return sum;
}

ContradictionReport contradiction_report(const SpectrumResult& s, const TailBound& tail,
                                         const ZetaZeroTable& table) {
  if (s.structure != SpectrumStructure::real_skew) {
    throw DomainError("contradiction report needs the spectrum of a real skew truncation");
  }
  if (tail.divergent) {
    throw DomainError("contradiction report needs a finite tail bound (standard variant)");
  }
  ContradictionReport r;
  r.n = s.source_dim;
  r.zeros_used = table.size();
  Real sum(tail.value.precision());
  for (const auto& l : s.lambdas) sum += l + s.solver_tolerance;
  // Rounded upward to binary64.
  r.spectrum_sum = std::nextafter(sum.to_double(), INFINITY);
  r.tail = std::nextafter(tail.value.to_double(), INFINITY);
  r.trace_norm_bound = std::nextafter(r.spectrum_sum + r.tail, INFINITY);
  double partial = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    partial += 1.0 / table.ordinates[k];
    r.partial_sums.push_back(partial);
    if (!r.crossover_k && partial > r.trace_norm_bound) r.crossover_k = k + 1;
  }
  return r;
}

nlohmann::json ContradictionReport::to_json() const {
  nlohmann::json j;
  j["trace_norm_bound"] = trace_norm_bound;
  j["partial_sums"] = partial_sums;
  j["crossover_k"] = crossover_k ? nlohmann::json(*crossover_k) : nlohmann::json(nullptr);
  j["n"] = n;
  j["zeros_used"] = zeros_used;
  return j;
}

std::string ContradictionReport::to_table() const {
  std::ostringstream out;
  char buf[160];
  out << "truncation n            " << n << "\n";
  std::snprintf(buf, sizeof buf, "sum lambda_j(R_n)       %.12e\n", spectrum_sum);
  out << buf;
  std::snprintf(buf, sizeof buf, "tail bound              %.12e\n", tail);
  out << buf;
  std::snprintf(buf, sizeof buf, "trace-norm bound (a)    %.12e\n", trace_norm_bound);
  out << buf;
  out << "\n   k   sum_{j<=k} 1/gamma_j (b)   (b) > (a)\n";
  for (std::size_t k = 0; k < partial_sums.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%4zu   %.12e         %s\n", k + 1, partial_sums[k],
                  partial_sums[k] > trace_norm_bound ? "yes" : "no");
    out << buf;
  }
  out << "\n";
  if (crossover_k) {
    out << "crossover k = " << *crossover_k << ": (b) > (a) from k = " << *crossover_k
        << " on.\n";
  } else {
    out << "no crossover within " << zeros_used << " zeros.\n";
  }
  return out.str();
}

}  // namespace qnc

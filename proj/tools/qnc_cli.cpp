// qnc: command-line front end for the QNC operator toolkit.
//
//   qnc [--precision B] [--n N] [--variant V] [--zeros PATH] [--format csv|json]
//       [--seed S] [--character PATH] [--out PREFIX] <verb> ...
//
// Verbs: qnc X Y | matrix | spectrum | compare. Exit codes: 0 success,
// 2 input or domain error, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qnc/character.hpp"
#include "qnc/errors.hpp"
#include "qnc/export.hpp"
#include "qnc/operator.hpp"
#include "qnc/pairing.hpp"
#include "qnc/primes.hpp"
#include "qnc/spectral.hpp"
#include "qnc/zeros.hpp"

#ifndef QNC_DEFAULT_ZEROS
#define QNC_DEFAULT_ZEROS "data/zeta_zeros_100.txt"
#endif

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  long precision_bits = qnc::kDefaultPrecision;
  std::size_t n = 25;
  std::string variant = "standard";
  std::string zeros_path = QNC_DEFAULT_ZEROS;
  std::string output_format = "csv";
  std::uint64_t seed = 1;
  std::string character_path;
  std::string out_prefix = "qnc";
};

void validate(const RunConfig& cfg) {
  if (cfg.precision_bits < qnc::kMinPrecision) {
    throw qnc::DomainError("--precision must be at least 64 bits");
  }
  if (cfg.n < 1) throw qnc::DomainError("--n must be at least 1");
  if (cfg.output_format != "csv" && cfg.output_format != "json") {
    throw qnc::DomainError("--format must be csv or json");
  }
  auto kind = qnc::parse_variant_kind(cfg.variant);
  if (kind == qnc::VariantKind::weighted && cfg.character_path.empty()) {
    throw qnc::DomainError("--variant weighted needs --character PATH");
  }
  if (!cfg.character_path.empty() && !std::filesystem::exists(cfg.character_path)) {
    throw qnc::DomainError("character file not found: " + cfg.character_path);
  }
}

qnc::Variant make_variant(const RunConfig& cfg) {
  switch (qnc::parse_variant_kind(cfg.variant)) {
    case qnc::VariantKind::modified:
      return qnc::Variant::modified();
    case qnc::VariantKind::weighted:
      return qnc::Variant::weighted(qnc::load_character(cfg.character_path, cfg.precision_bits));
    case qnc::VariantKind::standard:
      break;
  }
  return qnc::Variant::standard();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw qnc::DomainError("cannot write " + path);
  return out;
}

std::string tail_text(const qnc::TailBound& t) {
  return t.divergent ? std::string("divergent") : t.value.to_string();
}

bool is_integer_prime(const std::string& text, long& value) {
  try {
    std::size_t used = 0;
    value = std::stol(text, &used);
    return used == text.size() && qnc::is_prime(value);
  } catch (const std::exception&) {
    return false;
  }
}

int cmd_qnc(const RunConfig& cfg, const std::string& xs, const std::string& ys) {
  qnc::Real x(xs, cfg.precision_bits);
  qnc::Real y(ys, cfg.precision_bits);
  qnc::QncValue v = qnc::qnc_evaluate(x, y);
  long p = 0, q = 0;
  std::optional<qnc::Real> bound;
  if (is_integer_prime(xs, p) && is_integer_prime(ys, q)) {
    bound = qnc::qnc_bound(p, q, cfg.precision_bits);
  }
  if (cfg.output_format == "json") {
    json j;
    j["x"] = xs;
    j["y"] = ys;
    j["qnc"] = v.value.to_string();
    j["truncation_error"] = v.abs_error.to_string();
    j["bound"] = bound ? json(bound->to_string()) : json(nullptr);
    j["precision_bits"] = cfg.precision_bits;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "x,y,qnc,truncation_error,bound\n"
              << xs << ',' << ys << ',' << v.value.to_string() << ','
              << v.abs_error.to_string() << ',' << (bound ? bound->to_string() : "") << "\n";
  }
  return 0;
}

int cmd_matrix(const RunConfig& cfg, bool basis_check) {
  qnc::QncMatrix m = qnc::build_matrix(cfg.n, make_variant(cfg), cfg.precision_bits);
  const std::string csv_path = cfg.out_prefix + "_matrix.csv";
  const std::string json_path = cfg.out_prefix + "_matrix.json";
  {
    auto out = open_output(csv_path);
    qnc::write_matrix_csv(out, m);
  }
  {
    auto out = open_output(json_path);
    out << qnc::matrix_sidecar(m).dump(2) << "\n";
  }
  qnc::Real abs_sum = qnc::entry_abs_sum(m);
  qnc::Real hs = qnc::hs_norm_sq(m);
  std::optional<qnc::Real> criterion;
  if (basis_check) {
    auto basis = qnc::random_unitary(m.n(), cfg.seed, cfg.precision_bits);
    criterion = qnc::basis_criterion_check(m, basis);
  }
  if (cfg.output_format == "json") {
    json j = qnc::matrix_sidecar(m);
    j["entry_abs_sum"] = abs_sum.to_string();
    j["hs_norm_sq"] = hs.to_string();
    j["files"] = {csv_path, json_path};
    if (criterion) {
      j["basis_criterion"] = criterion->to_string();
      j["seed"] = cfg.seed;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n: " << m.n() << "\n"
              << "variant: " << qnc::to_string(m.kind()) << "\n"
              << "entry_abs_sum: " << abs_sum.to_string() << "\n"
              << "hs_norm_sq: " << hs.to_string() << "\n"
              << "tail: " << tail_text(m.tail_bound()) << "\n";
    if (criterion) {
      std::cout << "basis_criterion(seed=" << cfg.seed << "): " << criterion->to_string() << "\n";
    }
    std::cout << "wrote: " << csv_path << " " << json_path << "\n";
  }
  return 0;
}

std::vector<qnc::Complex> det_grid(double radius, int steps, qnc::Precision bits) {
  std::vector<qnc::Complex> ws;
  for (int a = 0; a < steps; ++a) {
    for (int b = 0; b < steps; ++b) {
      const double re = -radius + 2.0 * radius * a / (steps - 1);
      const double im = -radius + 2.0 * radius * b / (steps - 1);
      ws.emplace_back(re, im, bits);
    }
  }
  return ws;
}

int cmd_spectrum(const RunConfig& cfg, double det_radius, int det_steps) {
  qnc::QncMatrix m = qnc::build_matrix(cfg.n, make_variant(cfg), cfg.precision_bits);
  qnc::SpectrumResult s = qnc::singular_values(m);
  const std::string spectrum_path = cfg.out_prefix + "_spectrum.csv";
  {
    auto out = open_output(spectrum_path);
    qnc::write_spectrum_csv(out, s);
  }
  std::string det_path;
  if (det_steps >= 2) {
    det_path = cfg.out_prefix + "_det.csv";
    auto ws = det_grid(det_radius, det_steps, cfg.precision_bits);
    auto dets = qnc::sample_determinant(s, ws);
    auto out = open_output(det_path);
    qnc::write_determinant_csv(out, ws, dets);
  }
  qnc::Real sum(cfg.precision_bits);
  for (const auto& l : s.lambdas) sum += l;
  if (cfg.output_format == "json") {
    json j;
    j["n"] = s.source_dim;
    j["variant"] = std::string(qnc::to_string(m.kind()));
    json lambdas = json::array();
    for (const auto& l : s.lambdas) lambdas.push_back(l.to_string());
    j["lambdas"] = lambdas;
    j["pairing_defect"] = s.pairing_defect;
    j["solver_tolerance"] = s.solver_tolerance.to_string();
    j["lambda_sum"] = sum.to_string();
    j["files"] = det_path.empty() ? json{spectrum_path} : json{spectrum_path, det_path};
    std::cout << j.dump(2) << "\n";
  } else {
    qnc::write_spectrum_csv(std::cout, s);
    std::cerr << "pairing_defect: " << s.pairing_defect << "\n"
              << "solver_tolerance: " << s.solver_tolerance.to_string(6) << "\n"
              << "lambda_sum: " << sum.to_string() << "\n";
  }
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  if (qnc::parse_variant_kind(cfg.variant) != qnc::VariantKind::standard) {
    throw qnc::DomainError("compare runs on the standard variant only");
  }
  if (!std::filesystem::exists(cfg.zeros_path)) {
    throw qnc::DomainError("zeros file not found: " + cfg.zeros_path);
  }
  qnc::ZetaZeroTable zeros = qnc::load_zeros(cfg.zeros_path);
  qnc::QncMatrix m = qnc::build_matrix(cfg.n, qnc::Variant::standard(), cfg.precision_bits);
  qnc::SpectrumResult s = qnc::singular_values(m);
  qnc::ContradictionReport report = qnc::contradiction_report(s, m.tail_bound(), zeros);
  const std::string json_path = cfg.out_prefix + "_report.json";
  {
    auto out = open_output(json_path);
    out << report.to_json().dump(2) << "\n";
  }
  if (cfg.output_format == "json") {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << report.to_table();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QNC operator toolkit: truncations, spectra, determinants, zero comparison"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 64)");
  app.add_option("--n", cfg.n, "matrix dimension");
  app.add_option("--variant", cfg.variant, "standard | modified | weighted");
  app.add_option("--zeros", cfg.zeros_path, "zeta zero ordinate file");
  app.add_option("--format", cfg.output_format, "csv | json");
  app.add_option("--seed", cfg.seed, "seed for the random orthonormal basis");
  app.add_option("--character", cfg.character_path, "character table (weighted variant)");
  app.add_option("--out", cfg.out_prefix, "output file prefix");

  std::string xs, ys;
  auto* qnc_cmd = app.add_subcommand("qnc", "QNC(x, y) with truncation error and entry bound");
  qnc_cmd->add_option("x", xs)->required();
  qnc_cmd->add_option("y", ys)->required();

  bool basis_check = false;
  auto* matrix_cmd = app.add_subcommand("matrix", "build R_N, write CSV + JSON sidecar");
  matrix_cmd->add_flag("--basis-check", basis_check,
                       "evaluate sum |<R phi, phi>| over a seeded random unitary basis");

  double det_radius = 100.0;
  int det_steps = 0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "singular values and determinant samples");
  spectrum_cmd->add_option("--det-radius", det_radius, "half-width of the square w-grid");
  spectrum_cmd->add_option("--det-steps", det_steps, "grid points per axis (>= 2 enables)");

  auto* compare_cmd = app.add_subcommand("compare", "trace-norm bound vs reciprocal zero sums");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    validate(cfg);
    if (*qnc_cmd) return cmd_qnc(cfg, xs, ys);
    if (*matrix_cmd) return cmd_matrix(cfg, basis_check);
    if (*spectrum_cmd) return cmd_spectrum(cfg, det_radius, det_steps);
    if (*compare_cmd) return cmd_compare(cfg);
  } catch (const qnc::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

#include "qnc/character.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "qnc/errors.hpp"

namespace qnc {

namespace {

long residue(long n, long q) {
  long r = n % q;
  return r < 0 ? r + q : r;
}

}  // namespace

CharacterTable::CharacterTable(long modulus, std::map<long, Complex> values)
    : modulus_(modulus) {
  if (modulus < 1) throw ValidationError("character modulus must be positive");
  Precision prec = kMinPrecision;
  for (auto& [r, v] : values) {
    long key = residue(r, modulus);
    if (values_.count(key) != 0) {
      throw ValidationError("residue " + std::to_string(key) + " listed twice");
    }
    prec = std::max(prec, v.precision());
    values_.emplace(key, v);
  }
  const Real tol = Real::pow2(-prec / 2, prec);
  for (long r = 0; r < modulus; ++r) {
    Complex v = value(r);
    if (std::gcd(r, modulus) == 1) {
      if (abs(norm(v) - 1L) > tol) {
        throw ValidationError("|chi(" + std::to_string(r) + ")| != 1 for a unit residue");
      }
    } else if (!(norm(v) <= tol)) {
      throw ValidationError("chi(" + std::to_string(r) + ") must vanish, gcd with modulus > 1");
    }
  }
  for (long a = 1; a < modulus; ++a) {
    if (std::gcd(a, modulus) != 1) continue;
    for (long b = a; b < modulus; ++b) {
      if (std::gcd(b, modulus) != 1) continue;
      Complex diff = value(a * b) - value(a) * value(b);
      if (norm(diff) > tol) {
        throw ValidationError("character is not multiplicative at " + std::to_string(a) +
                              " * " + std::to_string(b));
      }
    }
  }
}

CharacterTable CharacterTable::principal(long modulus, Precision bits) {
  std::map<long, Complex> values;
  for (long r = 0; r < std::max(modulus, 1L); ++r) {
    if (std::gcd(r, modulus) == 1) values.emplace(r, Complex(1.0, 0.0, bits));
  }
  return CharacterTable(modulus, std::move(values));
}

Complex CharacterTable::value(long n) const {
  auto it = values_.find(residue(n, modulus_));
  if (it == values_.end()) return Complex(kMinPrecision);
  return it->second;
}

CharacterTable load_character(const std::filesystem::path& path, Precision bits) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open character file " + path.string(), 0);
  std::string line;
  long line_no = 0;
  long modulus = 0;
  std::map<long, Complex> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (modulus == 0) {
      if (first != "modulus" || !(fields >> modulus) || modulus < 1) {
        throw ParseError("expected header 'modulus <q>'", line_no);
      }
      continue;
    }
    std::string re, im, extra;
    if (!(fields >> re >> im) || (fields >> extra)) {
      throw ParseError("expected '<residue> <re> <im>'", line_no);
    }
    try {
      long r = std::stol(first);
      long key = residue(r, modulus);
      if (values.count(key) != 0) {
        throw ParseError("residue " + std::to_string(key) + " listed twice", line_no);
      }
      values.emplace(key, Complex(Real(re, bits), Real(im, bits)));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", line_no);
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range", line_no);
    }
  }
  if (modulus == 0) throw ParseError("missing 'modulus <q>' header", line_no);
  return CharacterTable(modulus, std::move(values));
}

Complex weighted_entry(const CharacterTable& chi, long p_i, long p_j, const Real& base,
                       bool allow_zero_weights) {
  Complex a = chi.value(p_i);
  Complex b = chi.value(p_j);
  if (!allow_zero_weights && (a.is_zero() || b.is_zero())) {
    throw ValidationError("chi vanishes at a prime dividing the modulus " +
                          std::to_string(chi.modulus()));
  }
  Complex weight = (a + conj(b)) / 2L;
  return weight * base;
}

}  // namespace qnc

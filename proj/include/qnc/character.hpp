#pragma once

#include <filesystem>
#include <map>
#include <vector>

#include "qnc/complex.hpp"

namespace qnc {

// Dirichlet character given as an explicit value table on residues mod q.
// Residues absent from the table have value zero.
class CharacterTable {
 public:
  // Validates: |chi(r)| = 1 exactly on residues coprime to q, zero elsewhere,
  // and complete multiplicativity chi(ab) = chi(a) chi(b), both to
  // 2^-(prec/2). Throws ValidationError.
  CharacterTable(long modulus, std::map<long, Complex> values);

  // chi = 1 on every residue coprime to q.
  static CharacterTable principal(long modulus, Precision bits = kDefaultPrecision);

  long modulus() const noexcept { return modulus_; }
  Complex value(long n) const;  // periodic extension to all integers
  const std::map<long, Complex>& values() const noexcept { return values_; }

 private:
  long modulus_;
  std::map<long, Complex> values_;  // keyed by residue in [0, q)
};

// Text format:
//   modulus <q>
//   <residue> <re> <im>
// '#' starts a comment. Throws ParseError (with line) or ValidationError.
CharacterTable load_character(const std::filesystem::path& path,
                              Precision bits = kDefaultPrecision);

// (chi(p_i) + conj(chi(p_j))) / 2 * base. Throws ValidationError when a
// weight chi(p) vanishes and zero weights are not allowed.
Complex weighted_entry(const CharacterTable& chi, long p_i, long p_j, const Real& base,
                       bool allow_zero_weights = false);

}  // namespace qnc

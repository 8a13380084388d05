#pragma once

// Textual group names such as "A3", "I2(5)" or "A1xI2(5)".

#include <string>
#include <vector>

#include "coxsol/coxeter.hpp"

namespace coxsol {

struct GroupFactor {
  std::string family;  // A, B, H or I2
  int parameter = 0;   // rank for A/B/H, m for I2
};

struct GroupSpec {
  std::vector<GroupFactor> factors;  // empty for the trivial group

  static constexpr int default_rank_bound = 4;

  /// Grammar: factor ("x" factor)*, factor = FAM digits | FAM "(" digits ")",
  /// FAM in {A, B, H, I2}; I2 needs the parenthesised form. "1" names the
  /// trivial group. Throws ParseError, or RankGuard above `rank_bound`.
  static GroupSpec parse(const std::string& text, int rank_bound = default_rank_bound);

  CoxeterMatrix matrix() const;
  int rank() const;
  bool is_dihedral() const { return factors.size() == 1 && factors[0].family == "I2"; }
  /// Canonical spelling, e.g. "A1xI2(5)".
  std::string name() const;
};

}  // namespace coxsol

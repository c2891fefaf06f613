// Solve a zero-dimensional polynomial system into an extension tower by
// lex Groebner basis + back-substitution, splitting levels on demand.
#pragma once

#include <string>
#include <vector>

#include "irrep/groebner.hpp"
#include "irrep/tower.hpp"

namespace irrep {

enum class LiftStatus {
  Point,                // a common zero was constructed
  PositiveDimensional,  // some variable has no pure-power leading monomial
  Inconsistent,         // the system has no solution (basis is {1})
  Unknown,              // a Groebner budget ran out
};

struct LiftResult {
  LiftStatus status = LiftStatus::Unknown;
  ExtensionTower tower;
  std::vector<TowerElem> assignment;  // indexed by variable, full tower height
  std::vector<VarIndex> free_vars;    // PositiveDimensional only
  GroebnerStats grevlex_stats;
  GroebnerStats lex_stats;
  std::vector<std::string> split_log;  // one line per level refinement
};

// generators must be nonempty and share a ring context
LiftResult lift_point(const std::vector<Polynomial>& generators, const Budget& budget);

}  // namespace irrep

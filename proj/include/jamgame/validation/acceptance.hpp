#pragma once

// Acceptance checks for the solver, the closed forms, the continuum limit
// and the simulator. Shared by the acceptance test binary and the CLI's
// validate command.

#include <string>
#include <vector>

#include "jamgame/model.hpp"

namespace jamgame::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // worst observed deviation or the first violation
  double seconds = 0.0;
};

// Criteria 1-7 run on fixed config sweeps; 8-10 use `reference`.
CriterionResult grid_point_exactness();
CriterionResult strategy_agreement();
CriterionResult powerful_jammer_clamp();
CriterionResult bound_ordering();
CriterionResult minimax_guarantee_pair();
CriterionResult semi_uniform_equivalence();
CriterionResult small_instance_oracle();
CriterionResult continuum_convergence(const GameConfig& reference);
CriterionResult simulator_unbiasedness(const GameConfig& reference);
CriterionResult monotonicity_and_nesting(const GameConfig& reference);

std::vector<CriterionResult> run_all(const GameConfig& reference);

// "PASS  3 powerful-jammer clamp: <detail> (0.12 s)"
std::string format_line(const CriterionResult& result);

}  // namespace jamgame::acceptance

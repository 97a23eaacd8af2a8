#pragma once

#include <vector>

#include "twinned/numeric.hpp"

namespace twinned {

/// maximize objective·x  subject to  rows·x = rhs, x >= 0.
struct LinearProgram {
  std::vector<RationalVector> rows;
  RationalVector rhs;
  RationalVector objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RationalVector x;
};

/// Two-phase tableau simplex over the rationals with Bland's pivoting rule,
/// so it terminates on degenerate problems.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace twinned

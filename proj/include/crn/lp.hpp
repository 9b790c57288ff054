#pragma once

#include <vector>

#include "crn/rational.hpp"

namespace crn::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  RationalVector x;     // primal solution when Optimal
  Rational objective;   // c . x when Optimal
  // Terminal phase-one value: sum of artificial variables. Positive iff infeasible,
  // which is the certificate reported for infeasible problems.
  Rational infeasibility;
  int pivots = 0;
};

/// maximize c . x  subject to  A x = b,  x >= 0.
/// Exact two-phase dense-tableau simplex with Bland's rule.
Result maximize(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& c);

/// Feasibility only (zero objective).
Result find_feasible(const std::vector<RationalVector>& a, const RationalVector& b);

}  // namespace crn::lp

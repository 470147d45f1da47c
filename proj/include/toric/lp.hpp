#pragma once

// Exact rational linear programming (dense two-phase simplex, Bland's rule).
// Sized for the handful of variables that cone and polytope tests need.

#include "toric/lattice.hpp"

namespace toric::lp {

enum class Status { Optimal, Infeasible, Unbounded };

/// maximize c.x subject to A x <= b, E x = f, x free.
struct Problem {
  RationalMatrix A;
  RationalVector b;
  RationalMatrix E;
  RationalVector f;
  RationalVector c;
  std::size_t num_vars = 0;
};

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RationalVector x;
};

Result maximize(const Problem& p);

/// True iff {A x <= b, E x = f} is nonempty.
bool feasible(const RationalMatrix& A, const RationalVector& b, const RationalMatrix& E,
              const RationalVector& f);

}  // namespace toric::lp

#pragma once

// Exact rational linear algebra: row reduction, kernels, and a
// Fourier-Motzkin feasibility solver with multiplier tracking.

#include <vector>

#include "kronface/characters.hpp"

namespace kronface {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row-echelon form with zero rows dropped. Pivots are 1 and rows
/// are ordered by pivot column, so the result is canonical for the row space.
RationalMatrix rref(RationalMatrix m);

int rank(const RationalMatrix& m);

/// Basis of { z : m z = 0 } in R^ncols, returned in RREF.
RationalMatrix null_space(const RationalMatrix& m, int ncols);

/// Scales a rational row to the primitive integer row with the same sign.
std::vector<BigInt> primitive_integer_row(const RationalVector& row);

/// coeffs . z >= rhs
struct LinearInequality {
  RationalVector coeffs;
  Rational rhs;
};

struct FeasibilityResult {
  bool feasible = false;
  RationalVector point;       // a solution when feasible
  std::vector<int> conflict;  // indices of an irreducible infeasible subsystem otherwise
};

/// Decides feasibility of a system of non-strict inequalities by
/// Fourier-Motzkin elimination. On success a point is recovered by back
/// substitution; on failure the nonnegative multipliers of the
/// contradiction are traced back to the inputs and the support is shrunk
/// to an irreducible subsystem.
FeasibilityResult fourier_motzkin(const std::vector<LinearInequality>& system, int nvars);

}  // namespace kronface

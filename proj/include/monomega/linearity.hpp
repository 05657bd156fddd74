#pragma once

#include <string>
#include <vector>

#include "monomega/omega.hpp"

namespace monomega {

struct LinearityVerdict {
  bool linear = false;
  std::string reason;
};

// An ideal is omega-linear when omega(I^m) = m * omega(I) for all m >= 1.

// Irreducible case: linear exactly when at most one exponent exceeds 1.
LinearityVerdict is_omega_linear_irreducible(const IrreducibleComponent& t);

// Primary case: linear exactly when omega equals the largest pure-power
// generator exponent.
LinearityVerdict is_omega_linear_primary(const MonomialIdeal& ideal);

// omega of the m-th power of an irreducible ideal: (m-1)*a_max + omega(T).
Exp omega_power_irreducible(const IrreducibleComponent& t, Exp m);

// Two-variable case: linear exactly when omega equals the larger of the two
// corner degrees a_1+b_1 and a_r+b_r of the staircase.
LinearityVerdict is_omega_linear_2d(const MonomialIdeal& ideal);

struct PowerTableRow {
  Exp m = 0;
  OmegaResult result;
  Exp linear_value = 0;  // m * omega(I)
};

struct PowerTable {
  OmegaResult base;
  std::vector<PowerTableRow> rows;
  bool all_exact = true;
  bool linear_up_to_max = true;
};

// Empirical table of omega(I^m) for m = 1..m_max against the linear target.
PowerTable check_linearity_by_powers(const MonomialIdeal& ideal, Exp m_max);

// Integral closure of a two-variable monomial ideal: monomials whose exponent
// points lie in the convex hull of the generator points plus the positive
// quadrant.
MonomialIdeal integral_closure_2d(const MonomialIdeal& ideal);

bool is_integrally_closed_2d(const MonomialIdeal& ideal);

// Implication check: if both two-variable inputs are omega-linear then so is
// their product. Returns the truth of the implication.
bool product_preserves_linearity_check(const MonomialIdeal& a,
                                       const MonomialIdeal& b);

}  // namespace monomega

#pragma once

#include <optional>

#include "monomega/omega.hpp"

namespace monomega {

// Slow, structure-free checkers used to validate the formula-driven paths.
// They deliberately reuse only the primitive ideal operations.

// Least mu >= 1 with radical(I)^mu inside I, recomputing the power from
// scratch each round. Unit -> 0, zero -> 1.
Exp brute_noether(const MonomialIdeal& ideal);

// Replays a certificate: the full product must lie in the target and every
// deletion of one factor must leave it.
bool verify_certificate(const WitnessCertificate& certificate);

struct MonomialBoundResult {
  Exp best_t = 0;
  std::optional<WitnessCertificate> certificate;
  bool exhausted = false;  // true when the whole capped space was searched
};

// Largest t <= t_max for which some multiset of t monomials of degree
// <= deg_cap certifies omega >= t. A lower bound only, never an equality
// claim. deg_cap <= 0 selects max generator degree + 1.
MonomialBoundResult monomial_absorbing_lower_bound(const MonomialIdeal& ideal,
                                                   Exp t_max, Exp deg_cap = 0);

// Searches for a length-t certificate whose factors are monomials or sums of
// two distinct monomials (unit coefficients), all of degree <= deg_cap.
std::optional<WitnessCertificate> binomial_absorbing_search(
    const MonomialIdeal& ideal, Exp t, Exp deg_cap = 0);

// Verifies T^m = intersection of (x_{i_1}^{k_1 a_1},...,x_{i_r}^{k_r a_r})
// over all positive integer vectors k with sum m + r - 1.
bool power_decomposition_check(const IrreducibleComponent& t, Exp m);

}  // namespace monomega

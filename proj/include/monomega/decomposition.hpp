#pragma once

#include <cstddef>
#include <vector>

#include "monomega/ideal.hpp"

namespace monomega {

// An ideal generated by pure powers of distinct variables. vars/exps are
// parallel arrays sorted by variable index.
struct IrreducibleComponent {
  MonomialIdeal ideal;
  std::vector<std::size_t> vars;
  std::vector<Exp> exps;

  // Validates the pure-power shape.
  static IrreducibleComponent from_ideal(const MonomialIdeal& ideal);
};

// A primary monomial ideal together with its radical, listed as the sorted
// indices of the supported variables.
struct PrimaryComponent {
  MonomialIdeal ideal;
  std::vector<std::size_t> prime;
};

struct StandardDecomposition {
  std::vector<IrreducibleComponent> components;
  bool irredundant = true;
};

// One primary component of the canonical decomposition, remembering which
// irreducible pieces were merged into it. noether is max over the pieces of
// their Noether exponent; argmax_part indexes a piece attaining it.
struct CanonicalComponent {
  PrimaryComponent primary;
  std::vector<IrreducibleComponent> parts;
  Exp noether = 0;
  std::size_t argmax_part = 0;
};

struct CanonicalDecomposition {
  std::vector<CanonicalComponent> components;
  bool irredundant = true;
};

// Irredundant decomposition into irreducible ideals, computed by repeatedly
// splitting a mixed generator ab (a, b coprime) into the two ideals where ab
// is replaced by a respectively b. Requires a proper, nonzero ideal. Results
// are memoized on the canonical generator key.
StandardDecomposition standard_decomposition(const MonomialIdeal& ideal);

// Closed-form decomposition for two-variable ideals read off the staircase of
// generators; must agree with standard_decomposition.
StandardDecomposition staircase_decomposition_2d(const MonomialIdeal& ideal);

// Groups the standard components by radical and intersects each group,
// producing the irredundant primary decomposition with distinct radicals.
CanonicalDecomposition canonical_primary_decomposition(const MonomialIdeal& ideal);

// Radicals of the canonical components, each a sorted index list, ordered by
// (size, lexicographic).
std::vector<std::vector<std::size_t>> associated_primes(const MonomialIdeal& ideal);

enum class PosetShape { Singleton, Antichain, Chain, UniqueTop, General };
const char* to_string(PosetShape shape);

// Shape of the set of associated primes under inclusion.
PosetShape ass_poset_shape(const MonomialIdeal& ideal);

// Krull dimension of R/I: var_count minus the smallest associated prime size.
std::size_t dim_quotient(const MonomialIdeal& ideal);

bool is_primary(const MonomialIdeal& ideal);

}  // namespace monomega

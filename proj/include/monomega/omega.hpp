#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monomega/decomposition.hpp"
#include "monomega/polynomial.hpp"

namespace monomega {

enum class OmegaRule {
  Principal,
  GcdFactor,
  Primary,
  Antichain,
  Chain,
  UniqueTopRecursion,
  Dim1,
  TwoVars,
  FallbackBounds,
};
const char* to_string(OmegaRule rule);

// Constructive evidence that omega(target) >= factors.size(): the product of
// the factors lies in the target while dropping any single factor leaves it.
struct WitnessCertificate {
  std::vector<SparsePolynomial> factors;
  MonomialIdeal target;
};

// Either an exact absorbing degree (lo == hi) or a proven interval. method is
// the ordered trace of dispatcher rules that produced the value; reasons
// explains each side of a non-exact interval.
struct OmegaResult {
  Exp lo = 0;
  Exp hi = 0;
  std::vector<OmegaRule> method;
  std::optional<WitnessCertificate> certificate;
  std::vector<std::string> reasons;

  bool exact() const { return lo == hi; }
  Exp value() const;  // throws std::logic_error unless exact
};

struct OmegaOptions {
  // When false, two-variable ideals are routed through the decomposition
  // rules instead of the staircase formula (both must agree).
  bool two_var_shortcut = true;
};

// Noether exponent of (x_{i_1}^{a_1},...,x_{i_l}^{a_l}): sum(a_j) - l + 1.
Exp noether_exponent_irreducible(const IrreducibleComponent& t);

// Least mu >= 1 with radical(I)^mu inside I. Unit ideal gives 0, zero ideal 1;
// primary ideals go through their standard components, everything else is an
// incremental containment search.
Exp noether_exponent(const MonomialIdeal& ideal);

// Absorbing degree omega(I): the least n such that whenever a product of n+1
// ring elements lies in I, some n-element subproduct already does. Exact
// values for a proper nonzero non-principal ideal carry a certificate whose
// length equals the value.
OmegaResult omega(const MonomialIdeal& ideal);
OmegaResult omega(const MonomialIdeal& ideal, const OmegaOptions& options);

// Witness of length sum(e(Q_i)) for components with pairwise incomparable
// primes: for each component take a standard piece T = (x_{i_1}^{a_1},...)
// attaining e(Q_i) and contribute (x_{i_1}+...+x_{i_l}) together with each
// (x_{i_j} + sum of squares of the other prime variables) repeated a_j - 1
// times. Throws when two primes are comparable or the certificate fails.
WitnessCertificate antichain_witness(const std::vector<PrimaryComponent>& components);

// Witness of length e(T) for a target ideal whose associated primes all lie
// inside the radical of T: x_{i_j} repeated a_j - 1 times plus the sum of the
// variables of T. gap must be a monomial of the intersection of the other
// components, supported inside T's variables with exponents strictly below
// T's. Throws when the inputs do not qualify (the certificate is verified).
WitnessCertificate top_component_witness(const MonomialIdeal& target,
                                         const IrreducibleComponent& top,
                                         const Monomial& gap);

// First monomial, in canonical order, of `others` that avoids `part` and is
// supported in part's variables with exponents strictly below part's.
std::optional<Monomial> find_gap_monomial(const MonomialIdeal& others,
                                          const IrreducibleComponent& part);

// omega(f * I) = deg(f) + omega(I): shifts both bounds, prepends the
// gcd-factor tag, and extends any certificate by the variables of f. A degree
// zero f returns the input unchanged.
OmegaResult shift_by_monomial(const Monomial& f, const OmegaResult& inner);

}  // namespace monomega

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "monomega/decomposition.hpp"
#include "monomega/parse.hpp"

using namespace monomega;

namespace {

MonomialIdeal ideal3(const std::string& text) {
  return parse_ideal(text, Ring::with_default_names(3));
}

std::vector<std::string> component_strings(const StandardDecomposition& dec) {
  std::vector<std::string> out;
  for (const auto& part : dec.components) out.push_back(part.ideal.str());
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal meet_standard(const StandardDecomposition& dec,
                            std::size_t skip) {
  MonomialIdeal out = MonomialIdeal::unit(dec.components.front().ideal.ring());
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    if (i != skip) out = intersect(out, dec.components[i].ideal);
  return out;
}

}  // namespace

TEST_CASE("standard decomposition of the mixed three-variable example") {
  MonomialIdeal ideal = ideal3("x^4, y^3, z^2, x*y, y^2*z");
  StandardDecomposition dec = standard_decomposition(ideal);
  CHECK(dec.irredundant);
  CHECK(component_strings(dec) ==
        std::vector<std::string>{"(x, y^2, z^2)", "(x, z, y^3)",
                                 "(y, z^2, x^4)"});

  // All components share the full radical, so the ideal is primary.
  CHECK(is_primary(ideal));
  CHECK(ass_poset_shape(ideal) == PosetShape::Singleton);
  CHECK(dim_quotient(ideal) == 0);
  CHECK(canonical_primary_decomposition(ideal).components.size() == 1);
}

TEST_CASE("canonical decomposition groups by radical") {
  MonomialIdeal ideal = ideal3("x^2, x*y, y^2, x*z^2");
  CanonicalDecomposition dec = canonical_primary_decomposition(ideal);
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.components[0].primary.ideal.str() == "(x, y^2)");
  CHECK(dec.components[0].primary.prime == std::vector<std::size_t>{0, 1});
  CHECK(dec.components[0].noether == 2);
  CHECK(dec.components[1].primary.ideal.str() == "(y, x^2, z^2)");
  CHECK(dec.components[1].primary.prime == std::vector<std::size_t>{0, 1, 2});
  CHECK(dec.components[1].noether == 3);
  CHECK(ass_poset_shape(ideal) == PosetShape::Chain);
  CHECK(dim_quotient(ideal) == 1);
  CHECK_FALSE(is_primary(ideal));

  CHECK(associated_primes(ideal) ==
        std::vector<std::vector<std::size_t>>{{0, 1}, {0, 1, 2}});
}

TEST_CASE("canonical components of the shifted cofactor example") {
  MonomialIdeal ideal =
      ideal3("x^3*y^4, x^2*y^5, x^4*y^3*z^2, x^5*y^3*z, x^2*y^4*z^2");
  MonomialIdeal cofactor = factor_out_gcd(ideal).second;
  CHECK(cofactor.str() == "(x*y, y^2, y*z^2, x^3*z, x^2*z^2)");

  CanonicalDecomposition dec = canonical_primary_decomposition(cofactor);
  std::vector<std::string> got;
  for (const auto& comp : dec.components) got.push_back(comp.primary.ideal.str());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"(x*y, y^2, z^2, x^3)", "(y, x^2)",
                                        "(y, z)"});
  CHECK(ass_poset_shape(cofactor) == PosetShape::UniqueTop);

  MonomialIdeal meet = MonomialIdeal::unit(cofactor.ring());
  for (const auto& comp : dec.components)
    meet = intersect(meet, comp.primary.ideal);
  CHECK(meet == cofactor);
}

TEST_CASE("poset shapes across the catalogue") {
  CHECK(ass_poset_shape(ideal3("y, x*z^2")) == PosetShape::Antichain);
  CHECK(ass_poset_shape(ideal3("x, y")) == PosetShape::Singleton);
  MonomialIdeal general =
      parse_ideal("x^2, x*y*w, y^2*w^2, x*z^2*w", Ring({"x", "y", "z", "w"}));
  CHECK(ass_poset_shape(general) == PosetShape::General);
  CHECK(std::string(to_string(PosetShape::General)) == "general");
  CHECK(std::string(to_string(PosetShape::UniqueTop)) == "unique-top");
}

TEST_CASE("two-variable staircase decomposition agrees with splitting") {
  for (const auto& ideal : corpus::staircase_ideals(4)) {
    if (ideal.is_unit()) continue;
    CHECK(component_strings(staircase_decomposition_2d(ideal)) ==
          component_strings(standard_decomposition(ideal)));
  }
}

TEST_CASE("decompositions are irredundant and recover the ideal") {
  auto ideals = corpus::sampled_ideals(404, 150);
  for (const auto& ideal : ideals) {
    StandardDecomposition dec = standard_decomposition(ideal);
    MonomialIdeal meet = MonomialIdeal::unit(ideal.ring());
    for (const auto& part : dec.components) meet = intersect(meet, part.ideal);
    CHECK(meet == ideal);
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      if (dec.components.size() == 1) break;
      CHECK_FALSE(dec.components[i].ideal.contains(meet_standard(dec, i)));
    }

    CanonicalDecomposition canonical = canonical_primary_decomposition(ideal);
    MonomialIdeal canonical_meet = MonomialIdeal::unit(ideal.ring());
    std::vector<std::vector<std::size_t>> primes;
    for (const auto& comp : canonical.components) {
      canonical_meet = intersect(canonical_meet, comp.primary.ideal);
      primes.push_back(comp.primary.prime);
      CHECK(is_primary(comp.primary.ideal));
    }
    CHECK(canonical_meet == ideal);
    std::sort(primes.begin(), primes.end());
    CHECK(std::adjacent_find(primes.begin(), primes.end()) == primes.end());
  }
}

TEST_CASE("irreducible component validation") {
  IrreducibleComponent c =
      IrreducibleComponent::from_ideal(ideal3("z, x^2"));
  CHECK(c.vars == std::vector<std::size_t>{0, 2});
  CHECK(c.exps == std::vector<Exp>{2, 1});

  CHECK_THROWS_AS(IrreducibleComponent::from_ideal(ideal3("x*y, z")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      IrreducibleComponent::from_ideal(MonomialIdeal::zero(Ring::with_default_names(3))),
      std::invalid_argument);
  CHECK_THROWS_AS(standard_decomposition(
                      MonomialIdeal::unit(Ring::with_default_names(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(staircase_decomposition_2d(ideal3("x, y")),
                  std::invalid_argument);
}

#include <string>

#include "corpus.hpp"
#include "doctest.h"
#include "monomega/linearity.hpp"
#include "monomega/oracle.hpp"
#include "monomega/parse.hpp"

using namespace monomega;

namespace {

MonomialIdeal ideal2(const std::string& text) {
  return parse_ideal(text, Ring::with_default_names(2));
}

MonomialIdeal ideal3(const std::string& text) {
  return parse_ideal(text, Ring::with_default_names(3));
}

}  // namespace

TEST_CASE("brute noether agrees with the formula path") {
  CHECK(brute_noether(ideal3("x^3, y^2, z^2, x*y")) == 4);
  CHECK(brute_noether(ideal2("x^2, x*y, y^2")) == 2);
  Ring two = Ring::with_default_names(2);
  CHECK(brute_noether(MonomialIdeal::unit(two)) == 0);
  CHECK(brute_noether(MonomialIdeal::zero(two)) == 1);

  for (const auto& ideal : corpus::sampled_ideals(7, 120))
    CHECK(brute_noether(ideal) == noether_exponent(ideal));
}

TEST_CASE("certificate replay accepts only strict witnesses") {
  MonomialIdeal target = ideal2("x^2, y^2");
  Ring ring = target.ring();
  auto x = SparsePolynomial::from_monomial(Monomial::variable(ring, 0));
  auto y = SparsePolynomial::from_monomial(Monomial::variable(ring, 1));

  WitnessCertificate good{{x, y, x + y}, target};
  CHECK(verify_certificate(good));

  // Too short: the product of the rest is not in the target.
  CHECK_FALSE(verify_certificate({{x, y}, target}));
  // A deletion stays inside the target.
  CHECK_FALSE(verify_certificate({{x, x, y, y}, target}));
  // Empty certificates claim nothing.
  CHECK_FALSE(verify_certificate({{}, target}));
}

TEST_CASE("monomial witnesses stop below the binomial value") {
  MonomialIdeal target = ideal2("x^2, y^2");
  MonomialBoundResult bound = monomial_absorbing_lower_bound(target, 3);
  CHECK(bound.best_t == 2);
  CHECK(bound.exhausted);
  REQUIRE(bound.certificate.has_value());
  CHECK(bound.certificate->factors.size() == 2);
  CHECK(verify_certificate(*bound.certificate));

  std::optional<WitnessCertificate> binomial =
      binomial_absorbing_search(target, 3);
  REQUIRE(binomial.has_value());
  CHECK(binomial->factors.size() == 3);
  CHECK(verify_certificate(*binomial));

  // Nothing of length 2 exists for (x, y): every candidate factor already
  // lies inside the ideal.
  CHECK_FALSE(binomial_absorbing_search(ideal2("x, y"), 2).has_value());
}

TEST_CASE("monomial witnesses reach the value on linear pure power ideals") {
  // With at most one exponent above 1, repeating the top variable is a
  // certificate, so the monomial search attains the exact value.
  for (const auto& t : corpus::irreducible_ideals(2, 3)) {
    if (!is_omega_linear_irreducible(t).linear) continue;
    Exp expected = omega(t.ideal).value();
    MonomialBoundResult bound =
        monomial_absorbing_lower_bound(t.ideal, expected);
    CHECK(bound.best_t == expected);
    REQUIRE(bound.certificate.has_value());
    CHECK(verify_certificate(*bound.certificate));
  }
}

TEST_CASE("powers match their irreducible decompositions") {
  auto t = IrreducibleComponent::from_ideal(ideal3("x^2, y, z^3"));
  for (Exp m = 1; m <= 3; ++m) CHECK(power_decomposition_check(t, m));
  auto single = IrreducibleComponent::from_ideal(ideal2("y^3"));
  CHECK(power_decomposition_check(single, 4));
}

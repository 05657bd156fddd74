#include <doctest.h>

#include <stdexcept>

#include "monomega/json_io.hpp"
#include "monomega/parse.hpp"

using namespace monomega;

TEST_CASE("canonical monomial order sorts by degree then leading exponent") {
  Ring ring({"x", "y", "z"});
  Monomial x = Monomial::variable(ring, 0);
  Monomial y = Monomial::variable(ring, 1);
  Monomial z = Monomial::variable(ring, 2);
  CHECK(canonical_less(x, y));
  CHECK(canonical_less(y, z));
  CHECK(canonical_less(z, x.times(x)));
  CHECK(canonical_less(x.times(x), x.times(y)));
  CHECK(canonical_less(x.times(y), y.times(y)));
  CHECK_FALSE(canonical_less(x, x));
}

TEST_CASE("generator minimalization removes divisible generators") {
  Ring ring({"x", "y"});
  MonomialIdeal ideal = MonomialIdeal::from_generators(
      ring, {Monomial(ring, {2, 0}), Monomial(ring, {2, 1}),
             Monomial(ring, {0, 3}), Monomial(ring, {1, 3})});
  CHECK(ideal.gens().size() == 2);
  CHECK(ideal.str() == "(x^2, y^3)");
}

TEST_CASE("membership is divisibility against some generator") {
  MonomialIdeal ideal = parse_ideal("x^2, x*y");
  Ring ring = ideal.ring();
  CHECK(ideal.contains(Monomial(ring, {2, 1})));
  CHECK(ideal.contains(Monomial(ring, {1, 1})));
  CHECK_FALSE(ideal.contains(Monomial(ring, {1, 0})));
  CHECK_FALSE(ideal.contains(Monomial(ring, {0, 4})));
}

TEST_CASE("sum product intersect colon radical behave on a staircase pair") {
  Ring ring({"x", "y"});
  MonomialIdeal a = parse_ideal("x^2, y", ring);
  MonomialIdeal b = parse_ideal("x, y^3", ring);
  CHECK(sum(a, b).str() == "(x, y)");
  CHECK(product(a, b).str() == "(x*y, x^3, y^4)");
  CHECK(intersect(a, b).str() == "(x^2, x*y, y^3)");
  CHECK(radical(parse_ideal("x^4, x^2*y^3", ring)).str() == "(x)");
  CHECK(radical(parse_ideal("x^2*y^3", ring)).str() == "(x*y)");
  CHECK(colon(parse_ideal("x^2, x*y^2", ring), parse_ideal("x", ring)).str() ==
        "(x, y^2)");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_ideal("x^"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x^-2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("w^2"), ParseError);
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  CHECK_THROWS_AS(parse_ideal("x,,y"), ParseError);
}

TEST_CASE("ring inference picks the shortest xyz prefix or x1..xn") {
  CHECK(parse_ideal("x^2").ring().var_count() == 1);
  CHECK(parse_ideal("x, y^2").ring().var_count() == 2);
  CHECK(parse_ideal("z").ring().var_count() == 3);
  CHECK(parse_ideal("x1*x3").ring().var_count() == 3);
  CHECK(parse_ideal("x^0").is_unit());
  CHECK(parse_ideal("1").is_unit());
  CHECK(parse_ideal("0").is_zero());
}

TEST_CASE("ideal JSON round-trips through render and parse") {
  MonomialIdeal ideal = parse_ideal("x^4, y^3, z^2, x*y, y^2*z");
  Json j = to_json(ideal);
  CHECK(j["ring"].size() == 3);
  CHECK(ideal_from_json(j) == ideal);
  CHECK(to_json(ideal_from_json(j)).dump() == j.dump());
}

TEST_CASE("zero and unit ideals stay distinguishable") {
  Ring ring({"x", "y"});
  MonomialIdeal zero = MonomialIdeal::zero(ring);
  MonomialIdeal unit = MonomialIdeal::unit(ring);
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.is_unit());
  CHECK(unit.is_unit());
  CHECK(product(zero, unit).is_zero());
  CHECK(intersect(zero, unit).is_zero());
  CHECK(sum(zero, unit).is_unit());
  CHECK(ideal_from_json(to_json(zero)) == zero);
}

TEST_CASE("polynomial membership checks every support monomial") {
  MonomialIdeal ideal = parse_ideal("x^2, y^2");
  Ring ring = ideal.ring();
  SparsePolynomial inside(ring);
  inside.add_term(Monomial(ring, {2, 1}), 1);
  inside.add_term(Monomial(ring, {0, 2}), -3);
  CHECK(contains_poly(ideal, inside));
  SparsePolynomial outside = inside;
  outside.add_term(Monomial(ring, {1, 1}), 1);
  CHECK_FALSE(contains_poly(ideal, outside));
  SparsePolynomial cancels(ring);
  cancels.add_term(Monomial(ring, {1, 1}), 1);
  cancels.add_term(Monomial(ring, {1, 1}), -1);
  CHECK(contains_poly(ideal, cancels));
}

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "doctest.h"
#include "monomega/linearity.hpp"
#include "monomega/parse.hpp"

using namespace monomega;

namespace {

MonomialIdeal ideal2(const std::string& text) {
  return parse_ideal(text, Ring::with_default_names(2));
}

}  // namespace

TEST_CASE("irreducible linearity criterion") {
  for (const auto& t : corpus::irreducible_ideals(3, 3)) {
    Exp top = *std::max_element(t.exps.begin(), t.exps.end());
    std::size_t above_one = 0;
    for (Exp e : t.exps)
      if (e > 1) ++above_one;

    LinearityVerdict verdict = is_omega_linear_irreducible(t);
    CHECK(verdict.linear == (above_one <= 1));
    CHECK(verdict.linear == (omega(t.ideal).value() == top));

    // The closed power formula matches literal powers.
    for (Exp m = 1; m <= 3; ++m)
      CHECK(omega_power_irreducible(t, m) ==
            omega(power(t.ideal, m)).value());

    // Linearity holds at every tested power or fails already at the square.
    PowerTable table = check_linearity_by_powers(t.ideal, 3);
    CHECK(table.all_exact);
    CHECK(table.linear_up_to_max == verdict.linear);
    if (!verdict.linear)
      CHECK(table.rows[1].result.value() < table.rows[1].linear_value);
  }
}

TEST_CASE("primary linearity criterion") {
  MonomialIdeal linear = ideal2("x^3, x*y, y^2");
  CHECK(is_omega_linear_primary(linear).linear);
  MonomialIdeal nonlinear = ideal2("x^2, y^2");
  CHECK_FALSE(is_omega_linear_primary(nonlinear).linear);
  CHECK_THROWS_AS(is_omega_linear_primary(
                      parse_ideal("y, x*z^2", Ring::with_default_names(3))),
                  std::invalid_argument);
}

TEST_CASE("linear but not integrally closed") {
  MonomialIdeal ideal = ideal2("x^3, x*y^2, y^4");
  CHECK(omega(ideal).value() == 4);
  CHECK(is_omega_linear_2d(ideal).linear);

  PowerTable table = check_linearity_by_powers(ideal, 3);
  CHECK(table.linear_up_to_max);
  for (const auto& row : table.rows)
    CHECK(row.result.value() == row.linear_value);

  MonomialIdeal closure = integral_closure_2d(ideal);
  CHECK(closure.str() == "(x^3, x^2*y, x*y^2, y^4)");
  CHECK(closure.contains(Monomial(ideal.ring(), {2, 1})));
  CHECK_FALSE(ideal.contains(Monomial(ideal.ring(), {2, 1})));
  CHECK_FALSE(is_integrally_closed_2d(ideal));
}

TEST_CASE("integral closure basics") {
  // Powers of the maximal ideal are integrally closed.
  CHECK(is_integrally_closed_2d(ideal2("x^2, x*y, y^2")));
  CHECK(is_integrally_closed_2d(ideal2("x, y")));
  // Principal ideals and the unit ideal are their own closure.
  CHECK(is_integrally_closed_2d(ideal2("x^2*y")));
  CHECK(is_integrally_closed_2d(MonomialIdeal::unit(Ring::with_default_names(2))));
  // The zero ideal closes to itself.
  MonomialIdeal zero = MonomialIdeal::zero(Ring::with_default_names(2));
  CHECK(integral_closure_2d(zero) == zero);

  for (const auto& ideal : corpus::staircase_ideals(4)) {
    MonomialIdeal closure = integral_closure_2d(ideal);
    CHECK(closure.contains(ideal));
    CHECK(integral_closure_2d(closure) == closure);
    if (is_integrally_closed_2d(ideal)) CHECK(closure == ideal);
  }
}

TEST_CASE("closed two-variable ideals are linear") {
  std::size_t closed = 0;
  for (const auto& ideal : corpus::staircase_ideals(4)) {
    if (!is_integrally_closed_2d(ideal)) continue;
    ++closed;
    CHECK(is_omega_linear_2d(ideal).linear);
  }
  CHECK(closed > 10);
}

TEST_CASE("products of linear two-variable ideals stay linear") {
  MonomialIdeal i = ideal2("x^3, x*y, y^2");
  MonomialIdeal j = ideal2("x^2, x*y, y^3");
  CHECK(product_preserves_linearity_check(i, j));

  // The implication is vacuously true when an input is nonlinear.
  CHECK(product_preserves_linearity_check(ideal2("x^2, y^2"), i));

  auto stairs = corpus::staircase_ideals(3);
  for (std::size_t a = 0; a < stairs.size(); a += 7)
    for (std::size_t b = a; b < stairs.size(); b += 11)
      CHECK(product_preserves_linearity_check(stairs[a], stairs[b]));
}

TEST_CASE("primary products stay below the linear bound") {
  // Primary staircases: both corner generators are pure powers.
  std::vector<MonomialIdeal> primary;
  for (const auto& ideal : corpus::staircase_ideals(3)) {
    if (ideal.is_unit()) continue;
    const auto& gens = ideal.gens();
    bool pure_x = false, pure_y = false;
    for (const auto& g : gens) {
      if (g.exp(1) == 0) pure_x = true;
      if (g.exp(0) == 0) pure_y = true;
    }
    if (pure_x && pure_y) primary.push_back(ideal);
  }
  CHECK(primary.size() == 19);
  for (std::size_t i = 0; i < primary.size(); i += 5) {
    Exp base = omega(primary[i]).value();
    for (Exp m = 2; m <= 3; ++m)
      CHECK(omega(power(primary[i], m)).value() <= m * base);

    // Product bound for two primary ideals: omega(IJ) never exceeds the
    // larger omega plus the larger corner degree of the other factor.
    const MonomialIdeal& a = primary[i];
    const MonomialIdeal& b = primary[(i * 3 + 1) % primary.size()];
    Exp wa = omega(a).value(), wb = omega(b).value();
    const MonomialIdeal& hi = wa >= wb ? a : b;
    const MonomialIdeal& lo = wa >= wb ? b : a;
    Exp corner = 0;
    for (const auto& g : lo.gens())
      if (g.exp(0) == 0 || g.exp(1) == 0) corner = std::max(corner, g.degree());
    CHECK(omega(product(hi, lo)).value() <=
          std::max(wa, wb) + corner);
  }
}

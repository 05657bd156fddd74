#include "monomega/linearity.hpp"

#include <algorithm>
#include <stdexcept>

#include "monomega/polynomial.hpp"

namespace monomega {

namespace {

Exp max_exponent(const IrreducibleComponent& t) {
  return *std::max_element(t.exps.begin(), t.exps.end());
}

std::string num(Exp v) { return std::to_string(v); }

}  // namespace

LinearityVerdict is_omega_linear_irreducible(const IrreducibleComponent& t) {
  Exp e = noether_exponent_irreducible(t);
  Exp a_s = max_exponent(t);
  if (e == a_s)
    return {true, "omega " + num(e) + " equals the top exponent, so every " +
                      "exponent except at most one is 1"};
  return {false, "omega " + num(e) + " exceeds the top exponent " + num(a_s) +
                     ", so omega of the m-th power grows like (m-1)*" +
                     num(a_s) + " + " + num(e)};
}

LinearityVerdict is_omega_linear_primary(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    return {false, "every power of the zero ideal has absorbing degree 1"};
  if (!is_primary(ideal))
    throw std::invalid_argument("ideal is not primary");
  Exp a_s = 0;
  for (const auto& g : ideal.gens()) {
    std::size_t support = 0;
    for (std::size_t v = 0; v < g.var_count(); ++v)
      if (g.exp(v) > 0) ++support;
    if (support == 1) a_s = std::max(a_s, g.degree());
  }
  Exp w = omega(ideal).value();
  if (w == a_s)
    return {true,
            "omega " + num(w) + " equals the largest pure power exponent"};
  return {false, "omega " + num(w) +
                     " exceeds the largest pure power exponent " + num(a_s)};
}

Exp omega_power_irreducible(const IrreducibleComponent& t, Exp m) {
  if (m < 1) throw std::invalid_argument("power must be positive");
  return checked_add(checked_mul(m - 1, max_exponent(t)),
                     noether_exponent_irreducible(t));
}

LinearityVerdict is_omega_linear_2d(const MonomialIdeal& ideal) {
  if (ideal.ring().var_count() != 2)
    throw std::invalid_argument("staircase linearity test needs two variables");
  if (ideal.is_zero())
    return {false, "every power of the zero ideal has absorbing degree 1"};
  const Monomial* x_corner = &ideal.gens()[0];
  const Monomial* y_corner = &ideal.gens()[0];
  for (const auto& g : ideal.gens()) {
    if (g.exp(0) > x_corner->exp(0)) x_corner = &g;
    if (g.exp(1) > y_corner->exp(1)) y_corner = &g;
  }
  Exp corner = std::max(x_corner->degree(), y_corner->degree());
  Exp w = omega(ideal).value();
  if (w == corner)
    return {true, "omega " + num(w) +
                      " equals the larger staircase corner degree"};
  return {false, "omega " + num(w) +
                     " exceeds the larger staircase corner degree " +
                     num(corner)};
}

PowerTable check_linearity_by_powers(const MonomialIdeal& ideal, Exp m_max) {
  if (m_max < 1) throw std::invalid_argument("power limit must be positive");
  PowerTable table;
  table.base = omega(ideal);
  table.all_exact = table.base.exact();
  if (!table.base.exact()) table.linear_up_to_max = false;
  Exp w1 = table.base.exact() ? table.base.lo : 0;
  MonomialIdeal pw = ideal;
  for (Exp m = 1; m <= m_max; ++m) {
    if (m > 1) pw = product(pw, ideal);
    PowerTableRow row;
    row.m = m;
    row.result = m == 1 ? table.base : omega(pw);
    row.linear_value = checked_mul(m, w1);
    if (!row.result.exact()) {
      table.all_exact = false;
      table.linear_up_to_max = false;
    } else if (!table.base.exact() || row.result.lo != row.linear_value) {
      table.linear_up_to_max = false;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

MonomialIdeal integral_closure_2d(const MonomialIdeal& ideal) {
  if (ideal.ring().var_count() != 2)
    throw std::invalid_argument("integral closure needs two variables");
  if (ideal.is_zero()) return ideal;
  const Ring& ring = ideal.ring();
  auto [h, cofactor] = factor_out_gcd(ideal);
  if (cofactor.is_unit()) return ideal;

  std::vector<std::pair<Exp, Exp>> pts;
  Exp a1 = 0, br = 0;
  for (const auto& g : cofactor.gens()) {
    pts.emplace_back(g.exp(0), g.exp(1));
    a1 = std::max(a1, g.exp(0));
    br = std::max(br, g.exp(1));
  }

  // (u, v) lies in the Newton polyhedron exactly when it dominates a convex
  // combination of two generator points; the combination parameter is pinned
  // down with exact rational interval arithmetic.
  auto in_polyhedron = [&](Exp u, Exp v) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j) {
        Rational lo = 0, hi = 1;
        bool feasible = true;
        auto constrain = [&](Exp c, Exp d) {
          if (c > 0)
            hi = std::min(hi, Rational(d) / Rational(c));
          else if (c < 0)
            lo = std::max(lo, Rational(d) / Rational(c));
          else if (d < 0)
            feasible = false;
        };
        constrain(pts[i].first - pts[j].first, u - pts[j].first);
        constrain(pts[i].second - pts[j].second, v - pts[j].second);
        if (feasible && lo <= hi) return true;
      }
    return false;
  };

  std::vector<Monomial> gens;
  for (Exp u = 0; u <= a1; ++u)
    for (Exp v = 0; v <= br; ++v)
      if (in_polyhedron(u, v)) gens.push_back(Monomial(ring, {u, v}));
  MonomialIdeal closure = MonomialIdeal::from_generators(ring, std::move(gens));
  if (h.is_unit()) return closure;
  return product(MonomialIdeal::principal(h), closure);
}

bool is_integrally_closed_2d(const MonomialIdeal& ideal) {
  return ideal == integral_closure_2d(ideal);
}

bool product_preserves_linearity_check(const MonomialIdeal& a,
                                       const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  LinearityVerdict la = is_omega_linear_2d(a);
  LinearityVerdict lb = is_omega_linear_2d(b);
  if (!la.linear || !lb.linear) return true;
  return is_omega_linear_2d(product(a, b)).linear;
}

}  // namespace monomega

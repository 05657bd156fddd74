#include "monomega/omega.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monomega {

const char* to_string(OmegaRule rule) {
  switch (rule) {
    case OmegaRule::Principal:
      return "PRINCIPAL";
    case OmegaRule::GcdFactor:
      return "GCD_FACTOR";
    case OmegaRule::Primary:
      return "PRIMARY";
    case OmegaRule::Antichain:
      return "ANTICHAIN";
    case OmegaRule::Chain:
      return "CHAIN";
    case OmegaRule::UniqueTopRecursion:
      return "UNIQUE_TOP_RECURSION";
    case OmegaRule::Dim1:
      return "DIM1";
    case OmegaRule::TwoVars:
      return "TWO_VARS";
    case OmegaRule::FallbackBounds:
      return "FALLBACK_BOUNDS";
  }
  return "FALLBACK_BOUNDS";
}

Exp OmegaResult::value() const {
  if (!exact())
    throw std::logic_error("omega is only bounded: [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]");
  return lo;
}

Exp noether_exponent_irreducible(const IrreducibleComponent& t) {
  Exp s = 1 - static_cast<Exp>(t.exps.size());
  for (Exp a : t.exps) s = checked_add(s, a);
  return s;
}

Exp noether_exponent(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  if (ideal.is_zero()) return 1;
  if (is_primary(ideal)) {
    Exp best = 0;
    for (const auto& part : standard_decomposition(ideal).components)
      best = std::max(best, noether_exponent_irreducible(part));
    return best;
  }
  MonomialIdeal rad = radical(ideal);
  MonomialIdeal pow = rad;
  for (Exp mu = 1;; ++mu) {
    if (ideal.contains(pow)) return mu;
    pow = product(pow, rad);
  }
}

namespace {

SparsePolynomial variable_poly(const Ring& ring, std::size_t v) {
  return SparsePolynomial::from_monomial(Monomial::variable(ring, v));
}

SparsePolynomial sum_of_variables(const Ring& ring,
                                  const std::vector<std::size_t>& vars) {
  SparsePolynomial f(ring);
  for (std::size_t v : vars) f.add_term(Monomial::variable(ring, v), 1);
  return f;
}

// Exact replay of a certificate with prefix/suffix products, so each deletion
// costs one multiplication instead of a full re-expansion.
bool certificate_holds(const WitnessCertificate& c) {
  if (c.factors.empty()) return false;
  const Ring& ring = c.target.ring();
  const std::size_t n = c.factors.size();
  std::vector<SparsePolynomial> prefix, suffix;
  prefix.reserve(n + 1);
  suffix.assign(n + 1, SparsePolynomial::one(ring));
  prefix.push_back(SparsePolynomial::one(ring));
  for (std::size_t i = 0; i < n; ++i)
    prefix.push_back(prefix.back() * c.factors[i]);
  for (std::size_t i = n; i-- > 0;)
    suffix[i] = c.factors[i] * suffix[i + 1];
  if (!contains_poly(c.target, prefix[n])) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (contains_poly(c.target, prefix[i] * suffix[i + 1])) return false;
  return true;
}

// Variable factors of a monomial, one per unit of degree.
std::vector<SparsePolynomial> monomial_factors(const Monomial& f) {
  std::vector<SparsePolynomial> out;
  for (std::size_t v = 0; v < f.var_count(); ++v)
    for (Exp i = 0; i < f.exp(v); ++i) out.push_back(variable_poly(f.ring(), v));
  return out;
}

struct Staircase {
  // (a, b) pairs sorted with a strictly decreasing, b strictly increasing.
  std::vector<std::pair<Exp, Exp>> steps;
};

Staircase staircase_of(const MonomialIdeal& ideal) {
  Staircase s;
  s.steps.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) s.steps.emplace_back(g.exp(0), g.exp(1));
  std::sort(s.steps.begin(), s.steps.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return s;
}

Exp staircase_omega(const Staircase& s, std::size_t* argmax = nullptr) {
  const auto& st = s.steps;
  if (st.size() == 1) {
    if (argmax) *argmax = 0;
    return checked_add(st[0].first, st[0].second);
  }
  Exp best = 0;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    Exp cand = checked_add(st[i].first, st[i + 1].second);
    if (cand > best) {
      best = cand;
      best_i = i;
    }
  }
  if (argmax) *argmax = best_i;
  return best - 1;
}

WitnessCertificate two_var_witness(const MonomialIdeal& ideal,
                                   const Staircase& s) {
  const Ring& ring = ideal.ring();
  WitnessCertificate cert{{}, ideal};
  if (s.steps.size() == 1) {
    cert.factors = monomial_factors(ideal.gens()[0]);
    return cert;
  }
  std::size_t i = 0;
  staircase_omega(s, &i);
  Exp a = s.steps[i].first;
  Exp b = s.steps[i + 1].second;
  for (Exp k = 1; k < a; ++k) cert.factors.push_back(variable_poly(ring, 0));
  for (Exp k = 1; k < b; ++k) cert.factors.push_back(variable_poly(ring, 1));
  cert.factors.push_back(sum_of_variables(ring, {0, 1}));
  if (!certificate_holds(cert))
    throw std::logic_error("staircase witness failed verification");
  return cert;
}

struct ShapeInfo {
  PosetShape shape = PosetShape::Singleton;
  std::size_t top = 0;  // index of the dominating component when one exists
};

bool prime_contains(const std::vector<std::size_t>& big,
                    const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ShapeInfo classify(const CanonicalDecomposition& dec) {
  const auto& comps = dec.components;
  ShapeInfo info;
  if (comps.size() == 1) return info;
  bool any_comparable = false;
  bool all_comparable = true;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      bool cmp = prime_contains(comps[j].primary.prime, comps[i].primary.prime) ||
                 prime_contains(comps[i].primary.prime, comps[j].primary.prime);
      any_comparable |= cmp;
      all_comparable &= cmp;
    }
  if (!any_comparable) {
    info.shape = PosetShape::Antichain;
    return info;
  }
  if (all_comparable) {
    info.shape = PosetShape::Chain;
    info.top = comps.size() - 1;
    return info;
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    bool top = true;
    for (std::size_t i = 0; i < comps.size() && top; ++i)
      if (i != k && !prime_contains(comps[k].primary.prime, comps[i].primary.prime))
        top = false;
    if (top) {
      info.shape = PosetShape::UniqueTop;
      info.top = k;
      return info;
    }
  }
  info.shape = PosetShape::General;
  return info;
}

// Intersection of every irreducible part across the decomposition except the
// part at (skip_comp, skip_part); the empty intersection is the unit ideal.
MonomialIdeal intersect_other_parts(const CanonicalDecomposition& dec,
                                    std::size_t skip_comp,
                                    std::size_t skip_part,
                                    std::size_t comp_limit) {
  const Ring& ring = dec.components[0].primary.ideal.ring();
  MonomialIdeal acc = MonomialIdeal::unit(ring);
  for (std::size_t c = 0; c < comp_limit; ++c)
    for (std::size_t p = 0; p < dec.components[c].parts.size(); ++p) {
      if (c == skip_comp && p == skip_part) continue;
      acc = intersect(acc, dec.components[c].parts[p].ideal);
    }
  return acc;
}

WitnessCertificate certify_top(const MonomialIdeal& target,
                               const CanonicalDecomposition& dec,
                               std::size_t comp, std::size_t comp_limit) {
  const auto& cc = dec.components[comp];
  const IrreducibleComponent& part = cc.parts[cc.argmax_part];
  MonomialIdeal others =
      intersect_other_parts(dec, comp, cc.argmax_part, comp_limit);
  auto gap = find_gap_monomial(others, part);
  if (!gap)
    throw std::logic_error("no gap monomial for an irredundant component");
  return top_component_witness(target, part, *gap);
}

Exp component_sum(const CanonicalDecomposition& dec) {
  Exp sum = 0;
  for (const auto& c : dec.components) sum = checked_add(sum, c.noether);
  return sum;
}

// Upper bound for the intersection of a set of canonical components: sum over
// connected comparability groups, with the unique-top reduction applied inside
// any group whose maximal prime dominates the whole group.
Exp grouped_upper_bound(const std::vector<const CanonicalComponent*>& comps);

Exp single_group_bound(std::vector<const CanonicalComponent*> group) {
  if (group.size() == 1) return group[0]->noether;
  for (std::size_t k = 0; k < group.size(); ++k) {
    bool top = true;
    for (std::size_t i = 0; i < group.size() && top; ++i)
      if (i != k &&
          !prime_contains(group[k]->primary.prime, group[i]->primary.prime))
        top = false;
    if (top) {
      Exp e_top = group[k]->noether;
      group.erase(group.begin() + static_cast<std::ptrdiff_t>(k));
      return std::max(e_top, grouped_upper_bound(group));
    }
  }
  Exp sum = 0;
  for (const auto* c : group) sum = checked_add(sum, c->noether);
  return sum;
}

Exp grouped_upper_bound(const std::vector<const CanonicalComponent*>& comps) {
  std::vector<int> label(comps.size(), -1);
  int groups = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (label[i] != -1) continue;
    label[i] = groups;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < comps.size(); ++v) {
        if (label[v] != -1) continue;
        if (prime_contains(comps[u]->primary.prime, comps[v]->primary.prime) ||
            prime_contains(comps[v]->primary.prime, comps[u]->primary.prime)) {
          label[v] = groups;
          stack.push_back(v);
        }
      }
    }
    ++groups;
  }
  Exp sum = 0;
  for (int g = 0; g < groups; ++g) {
    std::vector<const CanonicalComponent*> group;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (label[i] == g) group.push_back(comps[i]);
    sum = checked_add(sum, single_group_bound(std::move(group)));
  }
  return sum;
}

OmegaResult omega_impl(const MonomialIdeal& ideal, const OmegaOptions& opts) {
  const Ring& ring = ideal.ring();

  if (ideal.is_unit()) {
    OmegaResult r;
    r.lo = r.hi = 0;
    r.method = {OmegaRule::Principal};
    return r;
  }
  if (ideal.is_zero()) {
    OmegaResult r;
    r.lo = r.hi = 1;
    r.method = {OmegaRule::Primary};
    r.certificate = WitnessCertificate{{SparsePolynomial(ring)}, ideal};
    return r;
  }

  if (ring.var_count() == 2 && opts.two_var_shortcut) {
    Staircase s = staircase_of(ideal);
    OmegaResult r;
    r.lo = r.hi = staircase_omega(s);
    r.method = {OmegaRule::TwoVars};
    r.certificate = two_var_witness(ideal, s);
    return r;
  }

  auto [h, cofactor] = factor_out_gcd(ideal);
  if (cofactor.is_unit()) {
    OmegaResult r;
    r.lo = r.hi = h.degree();
    r.method = {OmegaRule::Principal};
    r.certificate = WitnessCertificate{monomial_factors(h), ideal};
    return r;
  }
  if (!h.is_unit()) return shift_by_monomial(h, omega_impl(cofactor, opts));

  CanonicalDecomposition dec = canonical_primary_decomposition(ideal);
  ShapeInfo info = classify(dec);

  switch (info.shape) {
    case PosetShape::Singleton: {
      OmegaResult r;
      r.lo = r.hi = dec.components[0].noether;
      r.method = {OmegaRule::Primary};
      r.certificate = certify_top(ideal, dec, 0, dec.components.size());
      return r;
    }
    case PosetShape::Antichain: {
      OmegaResult r;
      r.lo = r.hi = component_sum(dec);
      r.method = {OmegaRule::Antichain};
      std::vector<PrimaryComponent> comps;
      comps.reserve(dec.components.size());
      for (const auto& c : dec.components) comps.push_back(c.primary);
      r.certificate = antichain_witness(comps);
      r.certificate->target = ideal;
      return r;
    }
    case PosetShape::Chain: {
      // Components are sorted by prime size, which for a chain is the
      // inclusion order; peeling tops one at a time telescopes to the max.
      std::size_t best = 0;
      for (std::size_t k = 1; k < dec.components.size(); ++k)
        if (dec.components[k].noether > dec.components[best].noether) best = k;
      OmegaResult r;
      r.lo = r.hi = dec.components[best].noether;
      r.method = {OmegaRule::Chain};
      r.certificate = certify_top(ideal, dec, best, best + 1);
      r.certificate->target = ideal;
      return r;
    }
    case PosetShape::UniqueTop: {
      const auto& top = dec.components[info.top];
      MonomialIdeal rest = MonomialIdeal::unit(ring);
      for (std::size_t i = 0; i < dec.components.size(); ++i)
        if (i != info.top)
          rest = intersect(rest, dec.components[i].primary.ideal);
      OmegaResult inner = omega_impl(rest, opts);
      OmegaResult r;
      r.lo = std::max(top.noether, inner.lo);
      r.hi = std::max(top.noether, inner.hi);
      r.method.push_back(OmegaRule::UniqueTopRecursion);
      r.method.insert(r.method.end(), inner.method.begin(), inner.method.end());
      r.reasons = inner.reasons;
      if (r.exact()) {
        if (top.noether >= inner.hi) {
          r.certificate = certify_top(ideal, dec, info.top,
                                      dec.components.size());
        } else if (inner.certificate) {
          // Inner factors are constant-free polynomials in variables of the
          // top prime and there are more of them than e(top), so the product
          // also lands in the top component.
          r.certificate = inner.certificate;
          r.certificate->target = ideal;
        }
      }
      return r;
    }
    case PosetShape::General:
      break;
  }

  if (dim_quotient(ideal) == 1) {
    // Closed form for one-dimensional quotients: the only possible embedded
    // prime is the graded maximal ideal. Dead in practice: such posets are
    // always a singleton, an antichain, or have a unique top, and those
    // branches fire first.
    std::size_t m_index = dec.components.size();
    for (std::size_t k = 0; k < dec.components.size(); ++k)
      if (dec.components[k].primary.prime.size() == ring.var_count())
        m_index = k;
    OmegaResult r;
    r.method = {OmegaRule::Dim1};
    if (m_index == dec.components.size()) {
      r.lo = r.hi = component_sum(dec);
      std::vector<PrimaryComponent> comps;
      for (const auto& c : dec.components) comps.push_back(c.primary);
      r.certificate = antichain_witness(comps);
      r.certificate->target = ideal;
    } else {
      Exp others = 0;
      for (std::size_t i = 0; i < dec.components.size(); ++i)
        if (i != m_index) others = checked_add(others, dec.components[i].noether);
      Exp e_top = dec.components[m_index].noether;
      r.lo = r.hi = std::max(e_top, others);
      if (e_top >= others) {
        r.certificate = certify_top(ideal, dec, m_index,
                                    dec.components.size());
      } else {
        std::vector<PrimaryComponent> comps;
        for (std::size_t i = 0; i < dec.components.size(); ++i)
          if (i != m_index) comps.push_back(dec.components[i].primary);
        r.certificate = antichain_witness(comps);
        r.certificate->target = ideal;
      }
    }
    return r;
  }

  OmegaResult r;
  r.lo = std::max(noether_exponent(ideal), ideal.max_generator_degree());
  std::vector<const CanonicalComponent*> ptrs;
  ptrs.reserve(dec.components.size());
  for (const auto& c : dec.components) ptrs.push_back(&c);
  r.hi = grouped_upper_bound(ptrs);
  r.method = {OmegaRule::FallbackBounds};
  r.reasons.push_back(
      "lower bound: max of the Noether exponent and the top generator degree");
  r.reasons.push_back(
      "upper bound: intersection-wise sum over comparability groups of "
      "component Noether exponents, with the unique-top reduction inside "
      "dominated groups");
  return r;
}

}  // namespace

OmegaResult omega(const MonomialIdeal& ideal) {
  return omega(ideal, OmegaOptions{});
}

OmegaResult omega(const MonomialIdeal& ideal, const OmegaOptions& options) {
  return omega_impl(ideal, options);
}

WitnessCertificate antichain_witness(
    const std::vector<PrimaryComponent>& components) {
  if (components.empty())
    throw std::invalid_argument("empty component list");
  const Ring& ring = components[0].ideal.ring();
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (prime_contains(components[i].prime, components[j].prime) ||
          prime_contains(components[j].prime, components[i].prime))
        throw std::invalid_argument("primes are comparable");

  WitnessCertificate cert{{}, MonomialIdeal::unit(ring)};
  MonomialIdeal target = MonomialIdeal::unit(ring);
  for (const auto& comp : components) {
    target = intersect(target, comp.ideal);
    const auto parts = standard_decomposition(comp.ideal).components;
    const IrreducibleComponent* best = &parts[0];
    for (const auto& p : parts) {
      if (p.vars != comp.prime)
        throw std::invalid_argument("component is not primary on its prime");
      if (noether_exponent_irreducible(p) > noether_exponent_irreducible(*best))
        best = &p;
    }
    cert.factors.push_back(sum_of_variables(ring, comp.prime));
    for (std::size_t j = 0; j < best->vars.size(); ++j) {
      SparsePolynomial f = variable_poly(ring, best->vars[j]);
      for (std::size_t t = 0; t < best->vars.size(); ++t)
        if (t != j)
          f.add_term(Monomial::variable(ring, best->vars[t], 2), 1);
      for (Exp k = 1; k < best->exps[j]; ++k) cert.factors.push_back(f);
    }
  }
  cert.target = target;
  if (!certificate_holds(cert))
    throw std::invalid_argument("antichain witness failed verification");
  return cert;
}

WitnessCertificate top_component_witness(const MonomialIdeal& target,
                                         const IrreducibleComponent& top,
                                         const Monomial& gap) {
  const Ring& ring = target.ring();
  require_same_ring(ring, gap.ring());
  for (std::size_t v = 0; v < ring.var_count(); ++v) {
    bool in_top = std::find(top.vars.begin(), top.vars.end(), v) !=
                  top.vars.end();
    if (!in_top && gap.exp(v) != 0)
      throw std::invalid_argument("gap monomial leaves the top support");
  }
  for (std::size_t j = 0; j < top.vars.size(); ++j)
    if (gap.exp(top.vars[j]) >= top.exps[j])
      throw std::invalid_argument("gap monomial reaches a top exponent");

  WitnessCertificate cert{{}, target};
  std::vector<Exp> u_exps(ring.var_count(), 0);
  for (std::size_t j = 0; j < top.vars.size(); ++j) {
    u_exps[top.vars[j]] = top.exps[j] - 1;
    for (Exp k = 1; k < top.exps[j]; ++k)
      cert.factors.push_back(variable_poly(ring, top.vars[j]));
  }
  cert.factors.push_back(sum_of_variables(ring, top.vars));

  // Direct check: every term of u * (sum of top variables) must lie in the
  // target while u itself stays out; each deletion then leaves the term u.
  Monomial u(ring, std::move(u_exps));
  if (target.contains(u))
    throw std::invalid_argument("support monomial already lies in the target");
  for (std::size_t v : top.vars)
    if (!target.contains(u.times(Monomial::variable(ring, v))))
      throw std::invalid_argument("witness product escapes the target");
  return cert;
}

std::optional<Monomial> find_gap_monomial(const MonomialIdeal& others,
                                          const IrreducibleComponent& part) {
  // The least monomial of `others` inside the box below `part` is one of the
  // generators, since any other box element is a proper multiple of one.
  for (const auto& g : others.gens()) {
    bool ok = true;
    for (std::size_t v = 0; v < g.var_count() && ok; ++v) {
      if (g.exp(v) == 0) continue;
      auto it = std::find(part.vars.begin(), part.vars.end(), v);
      if (it == part.vars.end()) {
        ok = false;
        break;
      }
      std::size_t j = static_cast<std::size_t>(it - part.vars.begin());
      if (g.exp(v) >= part.exps[j]) ok = false;
    }
    if (ok) return g;
  }
  return std::nullopt;
}

OmegaResult shift_by_monomial(const Monomial& f, const OmegaResult& inner) {
  if (f.is_unit()) return inner;
  OmegaResult out = inner;
  out.lo = checked_add(inner.lo, f.degree());
  out.hi = checked_add(inner.hi, f.degree());
  out.method.insert(out.method.begin(), OmegaRule::GcdFactor);
  if (inner.certificate) {
    WitnessCertificate cert = *inner.certificate;
    auto extra = monomial_factors(f);
    cert.factors.insert(cert.factors.end(), extra.begin(), extra.end());
    cert.target = product(MonomialIdeal::principal(f), cert.target);
    out.certificate = std::move(cert);
  }
  return out;
}

}  // namespace monomega

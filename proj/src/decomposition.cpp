#include "monomega/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace monomega {

namespace {

std::size_t first_mixed_generator(const MonomialIdeal& ideal) {
  for (std::size_t i = 0; i < ideal.gens().size(); ++i)
    if (ideal.gens()[i].support().size() >= 2) return i;
  return ideal.gens().size();
}

Exp irreducible_noether(const IrreducibleComponent& c) {
  Exp s = 1 - static_cast<Exp>(c.exps.size());
  for (Exp a : c.exps) s = checked_add(s, a);
  return s;
}

// The componentwise-largest monomial outside comps[i]: one below each of its
// thresholds on its own support, and past every threshold elsewhere. Component
// i is redundant exactly when this monomial escapes some other component.
bool component_is_redundant(const std::vector<IrreducibleComponent>& comps,
                            std::size_t i, Exp beyond) {
  const Ring& ring = comps[i].ideal.ring();
  std::vector<Exp> exps(ring.var_count(), beyond);
  for (std::size_t k = 0; k < comps[i].vars.size(); ++k)
    exps[comps[i].vars[k]] = comps[i].exps[k] - 1;
  Monomial ubar(ring, std::move(exps));
  for (std::size_t j = 0; j < comps.size(); ++j)
    if (j != i && !comps[j].ideal.contains(ubar)) return true;
  return false;
}

std::vector<IrreducibleComponent> prune_redundant(
    std::vector<IrreducibleComponent> comps) {
  if (comps.size() <= 1) return comps;
  Exp beyond = 1;
  for (const auto& c : comps)
    for (Exp a : c.exps) beyond = std::max(beyond, checked_add(a, 1));
  bool removed = true;
  while (removed && comps.size() > 1) {
    removed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (component_is_redundant(comps, i, beyond)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  return comps;
}

void sort_components(std::vector<IrreducibleComponent>& comps) {
  std::sort(comps.begin(), comps.end(),
            [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
              return IdealLess{}(a.ideal, b.ideal);
            });
}

std::string memo_key(const MonomialIdeal& ideal) {
  std::string key;
  for (const auto& name : ideal.ring().names()) {
    key += name;
    key += ',';
  }
  key += '|';
  key += ideal.str();
  return key;
}

std::mutex memo_mutex;
std::map<std::string, StandardDecomposition>& memo_table() {
  static std::map<std::string, StandardDecomposition> table;
  return table;
}

bool primes_comparable(const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b) {
  if (a.size() <= b.size())
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

bool prime_order(const std::vector<std::size_t>& a,
                 const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

IrreducibleComponent IrreducibleComponent::from_ideal(
    const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument(
        "an irreducible component is proper and nonzero");
  IrreducibleComponent c{ideal, {}, {}};
  for (const auto& g : ideal.gens()) {
    auto supp = g.support();
    if (supp.size() != 1)
      throw std::invalid_argument("generator " + g.str() +
                                  " is not a pure variable power");
    c.vars.push_back(supp[0]);
    c.exps.push_back(g.exp(supp[0]));
  }
  std::vector<std::size_t> order(c.vars.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c.vars[a] < c.vars[b];
  });
  std::vector<std::size_t> vars;
  std::vector<Exp> exps;
  vars.reserve(order.size());
  exps.reserve(order.size());
  for (std::size_t idx : order) {
    vars.push_back(c.vars[idx]);
    exps.push_back(c.exps[idx]);
  }
  c.vars = std::move(vars);
  c.exps = std::move(exps);
  return c;
}

StandardDecomposition standard_decomposition(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument(
        "decomposition needs a proper nonzero ideal");

  const std::string key = memo_key(ideal);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo_table().find(key);
    if (it != memo_table().end()) return it->second;
  }

  const Ring& ring = ideal.ring();
  std::deque<MonomialIdeal> work{ideal};
  std::set<MonomialIdeal, IdealLess> visited{ideal};
  std::set<MonomialIdeal, IdealLess> leaves;

  while (!work.empty()) {
    MonomialIdeal current = std::move(work.front());
    work.pop_front();
    std::size_t mixed = first_mixed_generator(current);
    if (mixed == current.gens().size()) {
      leaves.insert(std::move(current));
      continue;
    }
    const Monomial& g = current.gens()[mixed];
    std::size_t low_var = g.support().front();
    Monomial pure = Monomial::variable(ring, low_var, g.exp(low_var));
    Monomial cofactor = g.divide_exact(pure);
    for (const Monomial& replacement : {pure, cofactor}) {
      std::vector<Monomial> gens;
      gens.reserve(current.gens().size());
      for (std::size_t i = 0; i < current.gens().size(); ++i)
        gens.push_back(i == mixed ? replacement : current.gens()[i]);
      MonomialIdeal next = minimalize(ring, std::move(gens));
      if (visited.insert(next).second) work.push_back(std::move(next));
    }
  }

  std::vector<IrreducibleComponent> comps;
  comps.reserve(leaves.size());
  for (const auto& leaf : leaves)
    comps.push_back(IrreducibleComponent::from_ideal(leaf));
  comps = prune_redundant(std::move(comps));
  sort_components(comps);

  StandardDecomposition result{std::move(comps), true};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo_table().emplace(key, result);
  }
  return result;
}

StandardDecomposition staircase_decomposition_2d(const MonomialIdeal& ideal) {
  if (ideal.ring().var_count() != 2)
    throw std::invalid_argument("staircase decomposition needs two variables");
  if (ideal.is_zero() || ideal.is_unit())
    throw std::invalid_argument(
        "decomposition needs a proper nonzero ideal");

  const Ring& ring = ideal.ring();
  std::vector<std::pair<Exp, Exp>> steps;
  steps.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) steps.emplace_back(g.exp(0), g.exp(1));
  std::sort(steps.begin(), steps.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<MonomialIdeal> ideals;
  if (steps.front().second > 0)
    ideals.push_back(
        MonomialIdeal::principal(Monomial::variable(ring, 1, steps.front().second)));
  if (steps.back().first > 0)
    ideals.push_back(
        MonomialIdeal::principal(Monomial::variable(ring, 0, steps.back().first)));
  for (std::size_t i = 0; i + 1 < steps.size(); ++i)
    ideals.push_back(MonomialIdeal::from_generators(
        ring, {Monomial::variable(ring, 0, steps[i].first),
               Monomial::variable(ring, 1, steps[i + 1].second)}));

  std::vector<IrreducibleComponent> comps;
  comps.reserve(ideals.size());
  for (const auto& q : ideals)
    comps.push_back(IrreducibleComponent::from_ideal(q));
  sort_components(comps);
  return StandardDecomposition{std::move(comps), true};
}

CanonicalDecomposition canonical_primary_decomposition(
    const MonomialIdeal& ideal) {
  StandardDecomposition base = standard_decomposition(ideal);

  std::map<std::vector<std::size_t>, std::vector<IrreducibleComponent>> groups;
  for (const auto& c : base.components) groups[c.vars].push_back(c);

  CanonicalDecomposition out;
  out.components.reserve(groups.size());
  for (auto& [prime, parts] : groups) {
    MonomialIdeal q = parts[0].ideal;
    for (std::size_t i = 1; i < parts.size(); ++i)
      q = intersect(q, parts[i].ideal);
    CanonicalComponent cc{PrimaryComponent{q, prime}, std::move(parts), 0, 0};
    for (std::size_t i = 0; i < cc.parts.size(); ++i) {
      Exp e = irreducible_noether(cc.parts[i]);
      if (e > cc.noether) {
        cc.noether = e;
        cc.argmax_part = i;
      }
    }
    out.components.push_back(std::move(cc));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const CanonicalComponent& a, const CanonicalComponent& b) {
              return prime_order(a.primary.prime, b.primary.prime);
            });
  out.irredundant = true;
  return out;
}

std::vector<std::vector<std::size_t>> associated_primes(
    const MonomialIdeal& ideal) {
  auto dec = canonical_primary_decomposition(ideal);
  std::vector<std::vector<std::size_t>> primes;
  primes.reserve(dec.components.size());
  for (const auto& c : dec.components) primes.push_back(c.primary.prime);
  return primes;
}

const char* to_string(PosetShape shape) {
  switch (shape) {
    case PosetShape::Singleton:
      return "singleton";
    case PosetShape::Antichain:
      return "antichain";
    case PosetShape::Chain:
      return "chain";
    case PosetShape::UniqueTop:
      return "unique-top";
    case PosetShape::General:
      return "general";
  }
  return "general";
}

PosetShape ass_poset_shape(const MonomialIdeal& ideal) {
  auto primes = associated_primes(ideal);
  if (primes.size() == 1) return PosetShape::Singleton;

  bool any_comparable = false;
  bool all_comparable = true;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      if (primes_comparable(primes[i], primes[j]))
        any_comparable = true;
      else
        all_comparable = false;
    }
  if (!any_comparable) return PosetShape::Antichain;
  if (all_comparable) return PosetShape::Chain;

  for (std::size_t k = 0; k < primes.size(); ++k) {
    bool top = true;
    for (std::size_t i = 0; i < primes.size() && top; ++i)
      if (i != k &&
          !std::includes(primes[k].begin(), primes[k].end(),
                         primes[i].begin(), primes[i].end()))
        top = false;
    if (top) return PosetShape::UniqueTop;
  }
  return PosetShape::General;
}

std::size_t dim_quotient(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return ideal.ring().var_count();
  if (ideal.is_unit())
    throw std::invalid_argument("dimension of the zero ring is undefined");
  auto primes = associated_primes(ideal);
  std::size_t min_size = primes.front().size();
  for (const auto& p : primes) min_size = std::min(min_size, p.size());
  return ideal.ring().var_count() - min_size;
}

bool is_primary(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  if (ideal.is_unit()) return false;
  std::set<std::size_t> support;
  std::set<std::size_t> pure;
  for (const auto& g : ideal.gens()) {
    auto supp = g.support();
    for (std::size_t v : supp) support.insert(v);
    if (supp.size() == 1) pure.insert(supp[0]);
  }
  return support == pure;
}

}  // namespace monomega

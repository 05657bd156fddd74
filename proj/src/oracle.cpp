#include "monomega/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "monomega/polynomial.hpp"

namespace monomega {

Exp brute_noether(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return 0;
  if (ideal.is_zero()) return 1;
  MonomialIdeal rad = radical(ideal);
  for (Exp mu = 1;; ++mu)
    if (ideal.contains(power(rad, mu))) return mu;
}

bool verify_certificate(const WitnessCertificate& certificate) {
  const auto& factors = certificate.factors;
  if (factors.empty()) return false;
  const Ring& ring = certificate.target.ring();
  const std::size_t n = factors.size();
  std::vector<SparsePolynomial> prefix, suffix;
  prefix.reserve(n + 1);
  suffix.assign(n + 1, SparsePolynomial::one(ring));
  prefix.push_back(SparsePolynomial::one(ring));
  for (std::size_t i = 0; i < n; ++i)
    prefix.push_back(prefix.back() * factors[i]);
  for (std::size_t i = n; i-- > 0;) suffix[i] = factors[i] * suffix[i + 1];
  if (!contains_poly(certificate.target, prefix[n])) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (contains_poly(certificate.target, prefix[i] * suffix[i + 1]))
      return false;
  return true;
}

namespace {

void list_monomials_up_to(const Ring& ring, Exp deg_cap,
                          std::vector<Exp>& exps, std::size_t var,
                          Exp remaining, std::vector<Monomial>& out) {
  if (var == ring.var_count()) {
    Monomial m(ring, exps);
    if (!m.is_unit()) out.push_back(std::move(m));
    return;
  }
  for (Exp e = 0; e <= remaining; ++e) {
    exps[var] = e;
    list_monomials_up_to(ring, deg_cap, exps, var + 1, remaining - e, out);
  }
  exps[var] = 0;
}

std::vector<Monomial> monomial_pool(const Ring& ring, Exp deg_cap) {
  std::vector<Monomial> pool;
  std::vector<Exp> exps(ring.var_count(), 0);
  list_monomials_up_to(ring, deg_cap, exps, 0, deg_cap, pool);
  std::sort(pool.begin(), pool.end(), canonical_less);
  return pool;
}

struct MonomialSearch {
  const MonomialIdeal& ideal;
  const std::vector<Monomial>& pool;
  std::vector<std::size_t> chosen;
  Monomial product;
  long long budget;

  bool dfs(std::size_t depth, std::size_t t, std::size_t from) {
    if (budget-- <= 0) return false;
    if (depth == t) return ideal.contains(product);
    for (std::size_t i = from; i < pool.size(); ++i) {
      Monomial next = product.times(pool[i]);
      // Every single deletion of the final product must stay outside, and
      // deletions only gain factors from here on, so reject early.
      bool ok = true;
      chosen.push_back(i);
      for (std::size_t j : chosen)
        if (ideal.contains(next.divide_exact(pool[j]))) {
          ok = false;
          break;
        }
      if (ok) {
        Monomial keep = product;
        product = next;
        if (dfs(depth + 1, t, i)) return true;
        product = keep;
      }
      chosen.pop_back();
      if (budget <= 0) return false;
    }
    return false;
  }
};

}  // namespace

MonomialBoundResult monomial_absorbing_lower_bound(const MonomialIdeal& ideal,
                                                   Exp t_max, Exp deg_cap) {
  if (t_max < 1) throw std::invalid_argument("t_max must be positive");
  if (deg_cap <= 0) deg_cap = ideal.max_generator_degree() + 1;
  const Ring& ring = ideal.ring();
  std::vector<Monomial> pool = monomial_pool(ring, deg_cap);

  MonomialBoundResult result;
  result.exhausted = true;
  for (Exp t = t_max; t >= 1; --t) {
    MonomialSearch search{ideal, pool, {}, Monomial::unit(ring), 4000000};
    if (search.dfs(0, static_cast<std::size_t>(t), 0)) {
      result.best_t = t;
      WitnessCertificate cert{{}, ideal};
      for (std::size_t i : search.chosen)
        cert.factors.push_back(SparsePolynomial::from_monomial(pool[i]));
      result.certificate = std::move(cert);
      return result;
    }
    if (search.budget <= 0) result.exhausted = false;
  }
  return result;
}

std::optional<WitnessCertificate> binomial_absorbing_search(
    const MonomialIdeal& ideal, Exp t, Exp deg_cap) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (deg_cap <= 0) deg_cap = ideal.max_generator_degree() + 1;
  const Ring& ring = ideal.ring();
  std::vector<Monomial> mons = monomial_pool(ring, deg_cap);
  std::vector<SparsePolynomial> pool;
  for (const auto& m : mons) pool.push_back(SparsePolynomial::from_monomial(m));
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      SparsePolynomial f = SparsePolynomial::from_monomial(mons[i]);
      f.add_term(mons[j], 1);
      pool.push_back(std::move(f));
    }

  std::vector<std::size_t> chosen;
  std::vector<SparsePolynomial> deletions;  // product of all but one factor
  SparsePolynomial full = SparsePolynomial::one(ring);

  std::function<bool(std::size_t, std::size_t)> dfs =
      [&](std::size_t depth, std::size_t from) -> bool {
    if (depth == static_cast<std::size_t>(t))
      return contains_poly(ideal, full);
    for (std::size_t i = from; i < pool.size(); ++i) {
      std::vector<SparsePolynomial> next_del;
      next_del.reserve(deletions.size() + 1);
      bool ok = true;
      for (const auto& d : deletions) {
        SparsePolynomial nd = d * pool[i];
        if (contains_poly(ideal, nd)) {
          ok = false;
          break;
        }
        next_del.push_back(std::move(nd));
      }
      if (ok && contains_poly(ideal, full)) ok = false;
      if (ok) {
        next_del.push_back(full);
        SparsePolynomial keep_full = full;
        std::vector<SparsePolynomial> keep_del = std::move(deletions);
        deletions = std::move(next_del);
        full = keep_full * pool[i];
        chosen.push_back(i);
        if (dfs(depth + 1, i)) return true;
        chosen.pop_back();
        full = std::move(keep_full);
        deletions = std::move(keep_del);
      }
    }
    return false;
  };

  if (!dfs(0, 0)) return std::nullopt;
  WitnessCertificate cert{{}, ideal};
  for (std::size_t i : chosen) cert.factors.push_back(pool[i]);
  return cert;
}

bool power_decomposition_check(const IrreducibleComponent& t, Exp m) {
  if (m < 1) throw std::invalid_argument("power must be positive");
  const Ring& ring = t.ideal.ring();
  const std::size_t r = t.vars.size();
  MonomialIdeal meet = MonomialIdeal::unit(ring);
  std::vector<Exp> k(r, 1);

  // Enumerate positive integer vectors of length r with sum m + r - 1.
  std::function<void(std::size_t, Exp)> walk = [&](std::size_t pos,
                                                   Exp remaining) {
    if (pos + 1 == r) {
      k[pos] = remaining;
      std::vector<Monomial> gens;
      for (std::size_t j = 0; j < r; ++j)
        gens.push_back(Monomial::variable(ring, t.vars[j],
                                          checked_mul(k[j], t.exps[j])));
      meet = intersect(meet,
                       MonomialIdeal::from_generators(ring, std::move(gens)));
      return;
    }
    for (Exp v = 1; v + static_cast<Exp>(r - pos - 1) <= remaining; ++v) {
      k[pos] = v;
      walk(pos + 1, remaining - v);
    }
  };
  walk(0, checked_add(m, static_cast<Exp>(r) - 1));
  return power(t.ideal, m) == meet;
}

}  // namespace monomega

#include "monomega/edge_ideal.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "monomega/decomposition.hpp"
#include "monomega/oracle.hpp"

namespace monomega {

Graph::Graph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count_ || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  edges_.insert(std::minmax(u, v));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  return edges_.count(std::minmax(u, v)) > 0;
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("edge ideal needs at least one edge");
  std::vector<std::string> names;
  names.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    names.push_back("x" + std::to_string(v + 1));
  Ring ring(std::move(names));
  std::vector<Monomial> gens;
  gens.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges())
    gens.push_back(
        Monomial::variable(ring, u).times(Monomial::variable(ring, v)));
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<std::size_t> bfs;
    bfs.push(s);
    while (!bfs.empty()) {
      std::size_t u = bfs.front();
      bfs.pop();
      for (std::size_t v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          bfs.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 16)
    throw std::invalid_argument("vertex cover enumeration is capped at 16");
  std::vector<std::pair<std::size_t, std::size_t>> edges(g.edges().begin(),
                                                         g.edges().end());
  std::vector<std::vector<std::size_t>> covers;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool cover = true;
    for (const auto& [u, v] : edges)
      if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
        cover = false;
        break;
      }
    if (!cover) continue;
    // Minimal when every chosen vertex is the sole cover of some edge.
    bool minimal = true;
    for (std::size_t w = 0; w < n && minimal; ++w) {
      if (!((mask >> w) & 1)) continue;
      bool needed = false;
      for (const auto& [u, v] : edges) {
        bool covered_without = (((mask >> u) & 1) && u != w) ||
                               (((mask >> v) & 1) && v != w);
        if (!covered_without) {
          needed = true;
          break;
        }
      }
      if (!needed) minimal = false;
    }
    if (!minimal) continue;
    std::vector<std::size_t> vertices;
    for (std::size_t w = 0; w < n; ++w)
      if ((mask >> w) & 1) vertices.push_back(w);
    covers.push_back(std::move(vertices));
  }
  std::sort(covers.begin(), covers.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return covers;
}

Exp omega_edge_ideal(const Graph& g) {
  auto covers = minimal_vertex_covers(g);
  Exp count = static_cast<Exp>(covers.size());
  OmegaResult res = omega(edge_ideal(g));
  if (!res.exact() || res.value() != count)
    throw std::logic_error(
        "edge ideal omega disagrees with the minimal cover count");
  return count;
}

WitnessCertificate squarefree_power_witness(const Graph& g, Exp m) {
  if (m < 1) throw std::invalid_argument("power must be positive");
  MonomialIdeal base = edge_ideal(g);
  const Ring& ring = base.ring();
  WitnessCertificate cert{{}, power(base, m)};
  for (const auto& cover : minimal_vertex_covers(g)) {
    SparsePolynomial f(ring);
    for (std::size_t v : cover) f.add_term(Monomial::variable(ring, v), 1);
    for (Exp k = 0; k < m; ++k) cert.factors.push_back(f);
  }
  return cert;
}

EdgePowerReport edge_power_linearity(const Graph& g, Exp m_max) {
  if (m_max < 1) throw std::invalid_argument("power limit must be positive");
  EdgePowerReport report;
  report.bipartite = is_bipartite(g);
  auto covers = minimal_vertex_covers(g);
  report.cover_count = static_cast<Exp>(covers.size());

  MonomialIdeal base = edge_ideal(g);
  const Ring& ring = base.ring();
  std::vector<MonomialIdeal> cover_primes;
  for (const auto& cover : covers) {
    std::vector<Monomial> vars;
    for (std::size_t v : cover) vars.push_back(Monomial::variable(ring, v));
    cover_primes.push_back(MonomialIdeal::from_generators(ring, std::move(vars)));
  }

  MonomialIdeal pw = base;
  std::vector<MonomialIdeal> prime_powers = cover_primes;
  for (Exp m = 1; m <= m_max; ++m) {
    if (m > 1) {
      pw = product(pw, base);
      for (std::size_t i = 0; i < prime_powers.size(); ++i)
        prime_powers[i] = product(prime_powers[i], cover_primes[i]);
    }
    EdgePowerRow row;
    row.m = m;
    row.result = omega(pw);
    row.linear_value = checked_mul(m, report.cover_count);

    WitnessCertificate cert{{}, pw};
    for (const auto& cover : covers) {
      SparsePolynomial f(ring);
      for (std::size_t v : cover) f.add_term(Monomial::variable(ring, v), 1);
      for (Exp k = 0; k < m; ++k) cert.factors.push_back(f);
    }
    row.witness_verified = verify_certificate(cert);

    if (report.bipartite) {
      MonomialIdeal meet = MonomialIdeal::unit(ring);
      for (const auto& p : prime_powers) meet = intersect(meet, p);
      row.bipartite_power_decomposition_ok = (pw == meet);
    }
    if (!row.result.exact() || row.result.lo != row.linear_value)
      report.linear_up_to_max = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace monomega

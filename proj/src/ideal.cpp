#include "monomega/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace monomega {

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::from_generators(const Ring& ring,
                                             std::vector<Monomial> gens) {
  for (const auto& g : gens) require_same_ring(ring, g.ring());
  std::sort(gens.begin(), gens.end(), canonical_less);
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  return MonomialIdeal(ring, std::move(kept));
}

MonomialIdeal MonomialIdeal::zero(const Ring& ring) {
  return MonomialIdeal(ring, {});
}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) {
  return MonomialIdeal(ring, {Monomial::unit(ring)});
}

MonomialIdeal MonomialIdeal::principal(const Monomial& gen) {
  return MonomialIdeal(gen.ring(), {gen});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_unit();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ring(ring_, m.ring());
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

Exp MonomialIdeal::max_generator_degree() const {
  Exp d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str();
  }
  out << ")";
  return out.str();
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  if (!ring_.same_as(other.ring_)) return false;
  if (gens_.size() != other.gens_.size()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].exps() != other.gens_[i].exps()) return false;
  return true;
}

bool IdealLess::operator()(const MonomialIdeal& a, const MonomialIdeal& b) const {
  const auto& ga = a.gens();
  const auto& gb = b.gens();
  const std::size_t n = std::min(ga.size(), gb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (canonical_less(ga[i], gb[i])) return true;
    if (canonical_less(gb[i], ga[i])) return false;
  }
  return ga.size() < gb.size();
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u.times(v));
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, Exp m) {
  if (m < 1) throw std::invalid_argument("power exponent must be >= 1");
  MonomialIdeal result = a;
  for (Exp i = 1; i < m; ++i) result = product(result, a);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) gens.push_back(u.lcm_with(v));
  return minimalize(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (const auto& v : b.gens()) {
    std::vector<Monomial> quotients;
    quotients.reserve(a.gens().size());
    for (const auto& u : a.gens()) quotients.push_back(u.divide_clamped(v));
    MonomialIdeal part = minimalize(a.ring(), std::move(quotients));
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal radical(const MonomialIdeal& a) {
  if (a.is_zero()) return a;
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(g.squarefree_part());
  return minimalize(a.ring(), std::move(gens));
}

std::pair<Monomial, MonomialIdeal> factor_out_gcd(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("factor_out_gcd of the zero ideal");
  Monomial h = a.gens()[0];
  for (std::size_t i = 1; i < a.gens().size(); ++i) h = h.gcd_with(a.gens()[i]);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(g.divide_exact(h));
  return {h, minimalize(a.ring(), std::move(gens))};
}

}  // namespace monomega

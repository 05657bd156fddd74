#include "monomega/monomial.hpp"

#include <sstream>
#include <stdexcept>

namespace monomega {

Exp checked_add(Exp a, Exp b) {
  Exp r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Exp checked_mul(Exp a, Exp b) {
  Exp r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

Monomial::Monomial(Ring ring, std::vector<Exp> exps)
    : ring_(std::move(ring)), exps_(std::move(exps)) {
  if (exps_.size() != ring_.var_count())
    throw std::invalid_argument("exponent vector length does not match ring");
  for (Exp e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::unit(const Ring& ring) {
  return Monomial(ring, std::vector<Exp>(ring.var_count(), 0));
}

Monomial Monomial::variable(const Ring& ring, std::size_t var, Exp e) {
  if (var >= ring.var_count()) throw std::invalid_argument("variable index out of range");
  std::vector<Exp> exps(ring.var_count(), 0);
  exps[var] = e;
  return Monomial(ring, std::move(exps));
}

Exp Monomial::degree() const {
  Exp d = 0;
  for (Exp e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_unit() const {
  for (Exp e : exps_)
    if (e != 0) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = checked_add(exps_[i], other.exps_[i]);
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::lcm_with(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::gcd_with(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::min(exps_[i], other.exps_[i]);
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::divide_exact(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::invalid_argument("not divisible");
    e[i] = exps_[i] - other.exps_[i];
  }
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::divide_clamped(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    e[i] = std::max<Exp>(exps_[i] - other.exps_[i], 0);
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::squarefree_part() const {
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = exps_[i] > 0 ? 1 : 0;
  return Monomial(ring_, std::move(e));
}

Monomial Monomial::pow(Exp m) const {
  if (m < 0) throw std::invalid_argument("negative power");
  std::vector<Exp> e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = checked_mul(exps_[i], m);
  return Monomial(ring_, std::move(e));
}

std::string Monomial::str() const {
  if (is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << ring_.name(i);
    if (exps_[i] != 1) out << "^" << exps_[i];
  }
  return out.str();
}

bool Monomial::operator==(const Monomial& other) const {
  return ring_.same_as(other.ring_) && exps_ == other.exps_;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  Exp da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& ea = a.exps();
  const auto& eb = b.exps();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  return false;
}

}  // namespace monomega

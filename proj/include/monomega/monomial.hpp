#pragma once

#include <string>
#include <vector>

#include "monomega/ring.hpp"

namespace monomega {

// Exponents are 64-bit and all arithmetic on them is overflow-checked, so a
// degree that would wrap raises std::overflow_error instead of corrupting.
using Exp = long long;

Exp checked_add(Exp a, Exp b);
Exp checked_mul(Exp a, Exp b);

// A monomial is an exponent vector over a fixed ring. Coefficients live in
// SparsePolynomial; membership and divisibility never look at them.
class Monomial {
 public:
  Monomial(Ring ring, std::vector<Exp> exps);

  static Monomial unit(const Ring& ring);
  static Monomial variable(const Ring& ring, std::size_t var, Exp e = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Exp>& exps() const { return exps_; }
  Exp exp(std::size_t var) const { return exps_.at(var); }
  std::size_t var_count() const { return exps_.size(); }

  Exp degree() const;
  bool is_unit() const;
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  Monomial lcm_with(const Monomial& other) const;
  Monomial gcd_with(const Monomial& other) const;
  // Componentwise a-b; throws unless other divides *this.
  Monomial divide_exact(const Monomial& other) const;
  // Componentwise max(a-b, 0).
  Monomial divide_clamped(const Monomial& other) const;
  // Exponents clamped to at most one.
  Monomial squarefree_part() const;
  Monomial pow(Exp m) const;

  std::string str() const;

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  Ring ring_;
  std::vector<Exp> exps_;
};

// Fixed total order used for every generator list and term map: lower total
// degree first; at equal degree the lexicographically larger exponent vector
// (earlier variables dominate) comes first, so x sorts before y before z.
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_less(a, b);
  }
};

inline bool divides(const Monomial& a, const Monomial& b) { return a.divides(b); }
inline Monomial lcm(const Monomial& a, const Monomial& b) { return a.lcm_with(b); }

}  // namespace monomega

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "monomega/monomial.hpp"

namespace monomega {

// A monomial ideal, stored through its unique minimal generating set in
// canonical order. The zero ideal has no generators; the unit ideal is
// generated by 1. Every factory minimalizes, so the invariant cannot be
// broken from outside.
class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(const Ring& ring,
                                       std::vector<Monomial> gens);
  static MonomialIdeal zero(const Ring& ring);
  static MonomialIdeal unit(const Ring& ring);
  static MonomialIdeal principal(const Monomial& gen);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& m) const;
  // True when every generator of other lies in *this, i.e. other is a subset.
  bool contains(const MonomialIdeal& other) const;

  Exp max_generator_degree() const;  // 0 for the zero ideal

  std::string str() const;

  bool operator==(const MonomialIdeal& other) const;
  bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

 private:
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  Ring ring_;
  std::vector<Monomial> gens_;
};

// Strict weak order on ideals over a common ring (generator lists compared in
// canonical order); used for memo tables and dedup sets.
struct IdealLess {
  bool operator()(const MonomialIdeal& a, const MonomialIdeal& b) const;
};

// Drops every generator strictly divisible by another and deduplicates.
MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

bool contains_monomial(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, Exp m);  // m >= 1
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// Ideal quotient a : b; b must be nonzero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

// Splits off the greatest common monomial factor h of the generators and
// returns (h, a/h); the cofactor has coprime generators. Rejects the zero
// ideal.
std::pair<Monomial, MonomialIdeal> factor_out_gcd(const MonomialIdeal& a);

}  // namespace monomega

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "monomega/ideal.hpp"
#include "monomega/monomial.hpp"

namespace monomega {

using Rational = boost::multiprecision::cpp_rational;

// Exact sparse polynomial with rational coefficients. Terms are kept in the
// canonical monomial order; zero coefficients are never stored.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(Ring ring);  // the zero polynomial

  static SparsePolynomial one(const Ring& ring);
  static SparsePolynomial from_monomial(const Monomial& m,
                                        const Rational& coeff = 1);
  // Sum of the given monomials with unit coefficients.
  static SparsePolynomial sum_of(const Ring& ring,
                                 const std::vector<Monomial>& monomials);

  const Ring& ring() const { return ring_; }
  void add_term(const Monomial& m, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational, CanonicalLess>& terms() const {
    return terms_;
  }
  std::vector<Monomial> support() const;

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;

  std::string str() const;

  bool operator==(const SparsePolynomial& other) const;
  bool operator!=(const SparsePolynomial& other) const {
    return !(*this == other);
  }

 private:
  Ring ring_;
  std::map<Monomial, Rational, CanonicalLess> terms_;
};

// A polynomial lies in a monomial ideal exactly when every support monomial
// does; in particular the zero polynomial lies in every ideal.
bool contains_poly(const MonomialIdeal& ideal, const SparsePolynomial& f);

}  // namespace monomega

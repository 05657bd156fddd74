#include "monomega/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace monomega {

SparsePolynomial::SparsePolynomial(Ring ring) : ring_(std::move(ring)) {}

SparsePolynomial SparsePolynomial::one(const Ring& ring) {
  SparsePolynomial f(ring);
  f.add_term(Monomial::unit(ring), 1);
  return f;
}

SparsePolynomial SparsePolynomial::from_monomial(const Monomial& m,
                                                 const Rational& coeff) {
  SparsePolynomial f(m.ring());
  f.add_term(m, coeff);
  return f;
}

SparsePolynomial SparsePolynomial::sum_of(
    const Ring& ring, const std::vector<Monomial>& monomials) {
  SparsePolynomial f(ring);
  for (const auto& m : monomials) f.add_term(m, 1);
  return f;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& coeff) {
  require_same_ring(ring_, m.ring());
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

std::vector<Monomial> SparsePolynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back(m);
  return out;
}

SparsePolynomial SparsePolynomial::operator+(
    const SparsePolynomial& other) const {
  require_same_ring(ring_, other.ring_);
  SparsePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(
    const SparsePolynomial& other) const {
  require_same_ring(ring_, other.ring_);
  SparsePolynomial out(ring_);
  if (terms_.empty() || other.terms_.empty()) return out;
  const auto& big =
      terms_.size() >= other.terms_.size() ? terms_ : other.terms_;
  const auto& small =
      terms_.size() >= other.terms_.size() ? other.terms_ : terms_;

  // Multiplying by a fixed monomial preserves the canonical order, so the
  // product is a k-way merge of k sorted streams (one per term of the smaller
  // factor) rather than a quadratic number of map insertions.
  using TermIt = std::map<Monomial, Rational, CanonicalLess>::const_iterator;
  struct Stream {
    TermIt pos;
    const Monomial* shift;
    const Rational* scale;
    Monomial current;
  };
  std::vector<Stream> streams;
  streams.reserve(small.size());
  for (const auto& [f, cf] : small)
    streams.push_back({big.begin(), &f, &cf, big.begin()->first.times(f)});

  auto stream_greater = [&streams](std::size_t a, std::size_t b) {
    return canonical_less(streams[b].current, streams[a].current);
  };
  std::vector<std::size_t> heap(streams.size());
  for (std::size_t i = 0; i < heap.size(); ++i) heap[i] = i;
  std::make_heap(heap.begin(), heap.end(), stream_greater);

  auto advance = [&](Stream& s) {
    ++s.pos;
    if (s.pos == big.end()) {
      heap.pop_back();
    } else {
      s.current = s.pos->first.times(*s.shift);
      std::push_heap(heap.begin(), heap.end(), stream_greater);
    }
  };

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), stream_greater);
    Stream& first = streams[heap.back()];
    Monomial m = first.current;
    Rational coeff = first.pos->second * (*first.scale);
    advance(first);
    while (!heap.empty() && streams[heap.front()].current == m) {
      std::pop_heap(heap.begin(), heap.end(), stream_greater);
      Stream& next = streams[heap.back()];
      coeff += next.pos->second * (*next.scale);
      advance(next);
    }
    if (coeff != 0)
      out.terms_.emplace_hint(out.terms_.end(), std::move(m),
                              std::move(coeff));
  }
  return out;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (abs_c != 1 || m.is_unit()) {
      os << abs_c;
      if (!m.is_unit()) os << "*";
    }
    if (!m.is_unit()) os << m.str();
  }
  return os.str();
}

bool SparsePolynomial::operator==(const SparsePolynomial& other) const {
  return ring_.same_as(other.ring_) && terms_ == other.terms_;
}

bool contains_poly(const MonomialIdeal& ideal, const SparsePolynomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  for (const auto& [m, c] : f.terms())
    if (!ideal.contains(m)) return false;
  return true;
}

}  // namespace monomega

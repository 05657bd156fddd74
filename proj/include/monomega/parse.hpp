#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "monomega/edge_ideal.hpp"
#include "monomega/ideal.hpp"

namespace monomega {

// Syntax error with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// Grammar:  ideal  ::= term ("," term)*
//           term   ::= factor ("*" factor)*
//           factor ::= var ("^" int)? | "1"
// The single token "0" denotes the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, const Ring& ring);

// Same, with the ring inferred: variables drawn from {x,y,z} select the
// shortest prefix of x,y,z covering them; names x1..xn select x1..x<max>;
// anything else must be declared explicitly.
MonomialIdeal parse_ideal(std::string_view text);
Ring infer_ring(std::string_view text);

// Whitespace- or comma-separated list of 1-based vertex pairs, one edge per
// pair; lines starting with '#' are ignored.
Graph parse_graph(std::string_view text);

}  // namespace monomega

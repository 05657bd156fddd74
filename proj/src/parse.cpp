#include "monomega/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace monomega {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) +
                         ")"),
      position_(position) {}

namespace {

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  // Identifier: leading letter or underscore, then alnum/underscore.
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) ||
          text[pos] == '_'))
      throw ParseError("expected a variable name", pos);
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  Exp integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    Exp value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = checked_add(checked_mul(value, 10), text[i] - '0');
    }
    return value;
  }
};

// One generator: product of var^exp factors, or the literal "1".
Monomial parse_term(Lexer& lex, const Ring& ring) {
  Monomial m = Monomial::unit(ring);
  for (;;) {
    lex.skip_ws();
    std::size_t here = lex.pos;
    if (lex.peek() == '1') {
      lex.accept('1');
    } else {
      std::string name = lex.ident();
      auto var = ring.index_of(name);
      if (!var)
        throw ParseError("unknown variable '" + name + "'", here);
      Exp e = 1;
      if (lex.accept('^')) e = lex.integer();
      m = m.times(Monomial::variable(ring, *var, e));
    }
    if (!lex.accept('*')) break;
  }
  return m;
}

std::vector<std::string> collect_names(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      std::string name(text.substr(start, i - start));
      if (seen.insert(name).second) names.push_back(name);
    } else {
      ++i;
    }
  }
  return names;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
  Lexer lex{text};
  if (lex.eof()) throw ParseError("empty input", lex.pos);

  // Lone "0" means the zero ideal; "0" is not a valid factor anywhere else.
  {
    Lexer probe = lex;
    if (probe.accept('0') && probe.eof()) return MonomialIdeal::zero(ring);
  }

  std::vector<Monomial> gens;
  for (;;) {
    gens.push_back(parse_term(lex, ring));
    if (!lex.accept(',')) break;
  }
  if (!lex.eof()) throw ParseError("unexpected trailing input", lex.pos);
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

Ring infer_ring(std::string_view text) {
  auto names = collect_names(text);
  if (names.empty()) return Ring::with_default_names(1);

  bool all_xyz = true;
  std::size_t max_xyz = 0;
  for (const auto& n : names) {
    if (n == "x")
      max_xyz = std::max<std::size_t>(max_xyz, 1);
    else if (n == "y")
      max_xyz = std::max<std::size_t>(max_xyz, 2);
    else if (n == "z")
      max_xyz = std::max<std::size_t>(max_xyz, 3);
    else
      all_xyz = false;
  }
  if (all_xyz) return Ring::with_default_names(max_xyz);

  bool all_indexed = true;
  std::size_t max_index = 0;
  for (const auto& n : names) {
    if (n.size() < 2 || n[0] != 'x' ||
        !std::all_of(n.begin() + 1, n.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      all_indexed = false;
      break;
    }
    std::size_t idx = std::strtoull(n.c_str() + 1, nullptr, 10);
    if (idx == 0) {
      all_indexed = false;
      break;
    }
    max_index = std::max(max_index, idx);
  }
  if (all_indexed && max_index >= 2) {
    std::vector<std::string> indexed;
    indexed.reserve(max_index);
    for (std::size_t i = 1; i <= max_index; ++i)
      indexed.push_back("x" + std::to_string(i));
    return Ring(std::move(indexed));
  }

  std::string offender = names.front();
  for (const auto& n : names) {
    bool xyz = n == "x" || n == "y" || n == "z";
    bool indexed = n.size() >= 2 && n[0] == 'x' &&
                   std::all_of(n.begin() + 1, n.end(), [](char c) {
                     return std::isdigit(static_cast<unsigned char>(c));
                   });
    if (!xyz && !indexed) {
      offender = n;
      break;
    }
  }
  throw ParseError("cannot infer a ring from variable '" + offender +
                       "'; declare the variables explicitly",
                   0);
}

MonomialIdeal parse_ideal(std::string_view text) {
  return parse_ideal(text, infer_ring(text));
}

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t max_vertex = 0;
  std::size_t line_start = 0;
  std::string buf(text);
  std::istringstream lines(buf);
  std::string line;
  while (std::getline(lines, line)) {
    std::size_t offset = line_start;
    line_start += line.size() + 1;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    std::vector<long long> nums;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("expected a vertex number, got '" + tok + "'",
                         offset);
      }
    }
    if (nums.size() % 2 != 0)
      throw ParseError("odd number of vertex entries on a line", offset);
    for (std::size_t i = 0; i + 1 < nums.size(); i += 2) {
      long long u = nums[i], v = nums[i + 1];
      if (u < 1 || v < 1)
        throw ParseError("vertices are 1-based positive integers", offset);
      if (u == v) throw ParseError("loops are not allowed", offset);
      pairs.emplace_back(static_cast<std::size_t>(u),
                         static_cast<std::size_t>(v));
      max_vertex = std::max({max_vertex, static_cast<std::size_t>(u),
                             static_cast<std::size_t>(v)});
    }
  }
  if (pairs.empty()) throw ParseError("no edges found", 0);
  Graph g(max_vertex);
  for (auto [u, v] : pairs) g.add_edge(u - 1, v - 1);
  return g;
}

}  // namespace monomega

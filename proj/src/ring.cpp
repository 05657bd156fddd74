#include "monomega/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monomega {

Ring::Ring(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name: " + n);
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ring Ring::with_default_names(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ring needs at least one variable");
  std::vector<std::string> names;
  if (n <= 3) {
    const char* xyz[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(xyz[i]);
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

bool Ring::same_as(const Ring& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw std::invalid_argument("operands live in different rings");
}

}  // namespace monomega

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monomega {

// Ambient polynomial ring over an unnamed coefficient field: just an ordered
// list of variable names. Handles are cheap to copy; two handles describe the
// same ring when they share storage or have identical name lists.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  // x,y,z for n <= 3, otherwise x1..xn.
  static Ring with_default_names(std::size_t n);

  std::size_t var_count() const { return names_->size(); }
  const std::vector<std::string>& names() const { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool same_as(const Ring& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Throws std::invalid_argument when the two handles disagree.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace monomega

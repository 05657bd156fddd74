#include "monomega/json_io.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace monomega {

namespace {

Json gens_to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.gens()) gens.push_back(g.exps());
  return gens;
}

Json component_to_json(const char* kind, const MonomialIdeal& ideal,
                       const std::vector<std::size_t>& prime) {
  Json c;
  c["kind"] = kind;
  c["gens"] = gens_to_json(ideal);
  c["prime"] = prime;
  return c;
}

const char* row_verdict(const OmegaResult& r, Exp linear_value) {
  if (!r.exact()) return "unknown";
  return r.lo == linear_value ? "linear" : "nonlinear";
}

}  // namespace

Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["ring"] = ideal.ring().names();
  j["gens"] = gens_to_json(ideal);
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs ring and gens");
  std::vector<std::string> names;
  for (const auto& name : j.at("ring")) names.push_back(name.get<std::string>());
  Ring ring(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& row : j.at("gens")) {
    std::vector<Exp> exps;
    for (const auto& e : row) {
      Exp v = e.get<Exp>();
      if (v < 0) throw std::invalid_argument("negative exponent in ideal JSON");
      exps.push_back(v);
    }
    if (exps.size() != ring.var_count())
      throw std::invalid_argument("exponent vector length mismatch");
    gens.emplace_back(ring, std::move(exps));
  }
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

Json to_json(const StandardDecomposition& d) {
  Json j = Json::array();
  for (const auto& c : d.components)
    j.push_back(component_to_json("irreducible", c.ideal, c.vars));
  return j;
}

Json to_json(const CanonicalDecomposition& d) {
  Json j = Json::array();
  for (const auto& c : d.components)
    j.push_back(component_to_json("primary", c.primary.ideal, c.primary.prime));
  return j;
}

Json to_json(const OmegaResult& r) {
  Json j;
  if (r.exact()) {
    j["value"] = Json{{"exact", r.lo}};
  } else {
    j["value"] = Json{{"lo", r.lo}, {"hi", r.hi}};
  }
  Json method = Json::array();
  for (OmegaRule rule : r.method) method.push_back(to_string(rule));
  j["method"] = method;
  if (r.certificate) {
    Json factors = Json::array();
    for (const auto& f : r.certificate->factors) factors.push_back(f.str());
    j["certificate"] = Json{{"factors", factors}};
  }
  if (!r.reasons.empty()) j["reasons"] = r.reasons;
  return j;
}

Json to_json(const PowerTable& t) {
  Json j;
  j["base"] = to_json(t.base);
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["m"] = row.m;
    r["omega"] = to_json(row.result);
    r["linear_value"] = row.linear_value;
    r["verdict"] = row_verdict(row.result, row.linear_value);
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  j["all_exact"] = t.all_exact;
  j["linear_up_to_max"] = t.linear_up_to_max;
  return j;
}

Json to_json(const EdgePowerReport& r) {
  Json j;
  j["bipartite"] = r.bipartite;
  j["cover_count"] = r.cover_count;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json item;
    item["m"] = row.m;
    item["omega"] = to_json(row.result);
    item["linear_value"] = row.linear_value;
    item["verdict"] = row_verdict(row.result, row.linear_value);
    item["witness_verified"] = row.witness_verified;
    if (row.bipartite_power_decomposition_ok)
      item["bipartite_power_decomposition_ok"] =
          *row.bipartite_power_decomposition_ok;
    rows.push_back(std::move(item));
  }
  j["rows"] = rows;
  j["linear_up_to_max"] = r.linear_up_to_max;
  return j;
}

}  // namespace monomega

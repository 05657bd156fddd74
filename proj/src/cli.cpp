#include "monomega/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "monomega/json_io.hpp"
#include "monomega/oracle.hpp"
#include "monomega/parse.hpp"

namespace monomega {

namespace {

struct GlobalOpts {
  std::string vars;
  bool json = false;
  unsigned long long seed = 0;
};

Ring ring_from_vars(const std::string& vars) {
  std::vector<std::string> names;
  std::string cur;
  for (char ch : vars) {
    if (ch == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) names.push_back(cur);
  if (names.empty()) throw ParseError("empty --vars list", 0);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw ParseError("duplicate variable name " + names[i], 0);
  return Ring(std::move(names));
}

MonomialIdeal parse_with(const GlobalOpts& g, const std::string& text) {
  if (!g.vars.empty()) return parse_ideal(text, ring_from_vars(g.vars));
  return parse_ideal(text);
}

std::string trace_str(const OmegaResult& r) {
  std::string s;
  for (std::size_t i = 0; i < r.method.size(); ++i) {
    if (i) s += " -> ";
    s += to_string(r.method[i]);
  }
  return s;
}

std::string value_str(const OmegaResult& r) {
  if (r.exact()) return std::to_string(r.lo);
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

std::string prime_str(const Ring& ring, const std::vector<std::size_t>& prime) {
  std::string s = "(";
  for (std::size_t i = 0; i < prime.size(); ++i) {
    if (i) s += ", ";
    s += ring.name(prime[i]);
  }
  return s + ")";
}

void print_omega_text(std::ostream& out, const OmegaResult& r,
                      bool with_certificate) {
  if (r.exact())
    out << "omega = " << r.lo << "\n";
  else
    out << "omega in [" << r.lo << ", " << r.hi << "]\n";
  out << "method: " << trace_str(r) << "\n";
  for (const auto& reason : r.reasons) out << "reason: " << reason << "\n";
  if (with_certificate) {
    if (r.certificate) {
      out << "certificate (" << r.certificate->factors.size() << " factors):\n";
      for (const auto& f : r.certificate->factors) out << "  " << f.str() << "\n";
    } else {
      out << "certificate: none\n";
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot read file " + path, 0);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

Json certificate_json(const WitnessCertificate& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) factors.push_back(f.str());
  return Json{{"factors", factors}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "exact absorbing degrees, Noether exponents, and primary "
      "decompositions of monomial ideals"};
  app.name("monomega");
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--vars", g.vars, "comma separated variable names");
  app.add_flag("--json", g.json, "machine readable output");
  app.add_option("--seed", g.seed,
                 "accepted for reproducible scripting; all commands are "
                 "deterministic");

  int rc = 0;

  auto* dec = app.add_subcommand("decompose", "decompose a monomial ideal");
  dec->fallthrough();
  std::string dec_ideal;
  bool dec_standard = false, dec_canonical = false;
  dec->add_option("ideal", dec_ideal, "generator list")->required();
  auto* dec_std_opt =
      dec->add_flag("--standard", dec_standard, "irreducible components");
  dec->add_flag("--canonical", dec_canonical, "primary components (default)")
      ->excludes(dec_std_opt);
  dec->callback([&] {
    MonomialIdeal ideal = parse_with(g, dec_ideal);
    if (dec_standard) {
      StandardDecomposition d = standard_decomposition(ideal);
      if (g.json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        out << "irreducible components (" << d.components.size() << "):\n";
        for (const auto& c : d.components) out << "  " << c.ideal.str() << "\n";
      }
    } else {
      CanonicalDecomposition d = canonical_primary_decomposition(ideal);
      if (g.json) {
        out << to_json(d).dump(2) << "\n";
      } else {
        out << "primary components (" << d.components.size() << "):\n";
        for (const auto& c : d.components)
          out << "  " << c.primary.ideal.str() << "  prime "
              << prime_str(ideal.ring(), c.primary.prime)
              << "  e = " << c.noether << "\n";
      }
    }
  });

  auto* noe = app.add_subcommand("noether", "Noether exponent e(I)");
  noe->fallthrough();
  std::string noe_ideal;
  noe->add_option("ideal", noe_ideal, "generator list")->required();
  noe->callback([&] {
    Exp e = noether_exponent(parse_with(g, noe_ideal));
    if (g.json)
      out << Json{{"noether", e}}.dump(2) << "\n";
    else
      out << "noether = " << e << "\n";
  });

  auto* omg = app.add_subcommand("omega", "absorbing degree omega(I)");
  omg->fallthrough();
  std::string omg_ideal;
  bool omg_cert = false, omg_verify = false;
  omg->add_option("ideal", omg_ideal, "generator list")->required();
  omg->add_flag("--certificate", omg_cert, "print the witness factors");
  omg->add_flag("--verify", omg_verify,
                "replay the certificate through the independent checker");
  omg->callback([&] {
    OmegaResult r = omega(parse_with(g, omg_ideal));
    bool verified = false;
    if (omg_verify && r.certificate)
      verified = verify_certificate(*r.certificate);
    if (g.json) {
      Json j = to_json(r);
      if (omg_verify) j["verified"] = r.certificate ? Json(verified) : Json();
      out << j.dump(2) << "\n";
    } else {
      print_omega_text(out, r, omg_cert);
      if (omg_verify) {
        if (r.certificate)
          out << "certificate verified: " << (verified ? "yes" : "no") << "\n";
        else
          out << "certificate verified: nothing to verify\n";
      }
    }
    if (omg_verify && r.certificate && !verified) rc = 1;
  });

  auto* pow_cmd = app.add_subcommand("power", "generators of I^m");
  pow_cmd->fallthrough();
  Exp pow_m = 1;
  std::string pow_ideal;
  pow_cmd->add_option("m", pow_m, "exponent")->required();
  pow_cmd->add_option("ideal", pow_ideal, "generator list")->required();
  pow_cmd->callback([&] {
    MonomialIdeal p = power(parse_with(g, pow_ideal), pow_m);
    if (g.json)
      out << to_json(p).dump(2) << "\n";
    else
      out << p.str() << "\n";
  });

  auto* lin = app.add_subcommand("omega-linear",
                                 "compare omega(I^m) with m*omega(I)");
  lin->fallthrough();
  std::string lin_ideal;
  Exp lin_max = 3;
  lin->add_option("ideal", lin_ideal, "generator list")->required();
  lin->add_option("--max-power", lin_max, "largest power to table");
  lin->callback([&] {
    PowerTable table = check_linearity_by_powers(parse_with(g, lin_ideal),
                                                 lin_max);
    if (g.json) {
      out << to_json(table).dump(2) << "\n";
      return;
    }
    out << "m\tomega(I^m)\tm*omega(I)\tverdict\n";
    for (const auto& row : table.rows) {
      const char* verdict = !row.result.exact()         ? "unknown"
                            : row.result.lo == row.linear_value ? "linear"
                                                                : "nonlinear";
      out << row.m << "\t" << value_str(row.result) << "\t"
          << row.linear_value << "\t" << verdict << "\n";
    }
    out << "omega-linear up to " << lin_max << ": "
        << (table.linear_up_to_max ? "yes" : "no") << "\n";
  });

  auto* clo = app.add_subcommand("closure",
                                 "integral closure of a two-variable ideal");
  clo->fallthrough();
  std::string clo_ideal;
  clo->add_option("ideal", clo_ideal, "generator list")->required();
  clo->callback([&] {
    MonomialIdeal ideal = parse_with(g, clo_ideal);
    MonomialIdeal closure = integral_closure_2d(ideal);
    bool closed = closure == ideal;
    if (g.json) {
      Json j;
      j["closure"] = to_json(closure);
      j["integrally_closed"] = closed;
      out << j.dump(2) << "\n";
    } else {
      out << "closure = " << closure.str() << "\n";
      out << "integrally closed: " << (closed ? "yes" : "no") << "\n";
    }
  });

  auto* edge = app.add_subcommand("edge-ideal", "edge ideal of a graph");
  edge->fallthrough();
  std::string edge_file;
  Exp edge_powers = 1;
  edge->add_option("--graph", edge_file, "file of 1-based vertex pairs")
      ->required();
  edge->add_option("--powers", edge_powers, "largest power to table");
  edge->callback([&] {
    Graph graph = parse_graph(read_file(edge_file));
    MonomialIdeal ideal = edge_ideal(graph);
    auto covers = minimal_vertex_covers(graph);
    Exp count = omega_edge_ideal(graph);
    EdgePowerReport report = edge_power_linearity(graph, edge_powers);
    if (g.json) {
      Json j;
      j["ideal"] = to_json(ideal);
      Json cover_list = Json::array();
      for (const auto& cover : covers) {
        Json one = Json::array();
        for (std::size_t v : cover) one.push_back(v + 1);
        cover_list.push_back(std::move(one));
      }
      j["covers"] = cover_list;
      j["omega"] = count;
      j["powers"] = to_json(report);
      out << j.dump(2) << "\n";
      return;
    }
    out << "ideal = " << ideal.str() << "\n";
    out << "bipartite: " << (report.bipartite ? "yes" : "no") << "\n";
    out << "minimal covers (" << covers.size() << "):";
    for (const auto& cover : covers) {
      out << " {";
      for (std::size_t i = 0; i < cover.size(); ++i)
        out << (i ? ", " : "") << ideal.ring().name(cover[i]);
      out << "}";
    }
    out << "\n";
    out << "omega = " << count << "\n";
    out << "m\tomega(I^m)\tm*omega(I)\twitness\n";
    for (const auto& row : report.rows) {
      out << row.m << "\t" << value_str(row.result) << "\t"
          << row.linear_value << "\t"
          << (row.witness_verified ? "verified" : "failed");
      if (row.bipartite_power_decomposition_ok)
        out << "\tintersection "
            << (*row.bipartite_power_decomposition_ok ? "matches" : "differs");
      out << "\n";
    }
  });

  auto* orc = app.add_subcommand("oracle", "slow independent checkers");
  orc->fallthrough();
  orc->require_subcommand(1);

  auto* obr = orc->add_subcommand("noether", "incremental radical-power search");
  obr->fallthrough();
  std::string obr_ideal;
  obr->add_option("ideal", obr_ideal, "generator list")->required();
  obr->callback([&] {
    Exp e = brute_noether(parse_with(g, obr_ideal));
    if (g.json)
      out << Json{{"noether", e}}.dump(2) << "\n";
    else
      out << "noether = " << e << "\n";
  });

  auto* oml = orc->add_subcommand("monomial-lower",
                                  "largest monomial-certificate length");
  oml->fallthrough();
  std::string oml_ideal;
  Exp oml_tmax = 1, oml_cap = 0;
  oml->add_option("ideal", oml_ideal, "generator list")->required();
  oml->add_option("--t-max", oml_tmax, "largest length to try")->required();
  oml->add_option("--deg-cap", oml_cap,
                  "factor degree cap (default max generator degree + 1)");
  oml->callback([&] {
    MonomialBoundResult r = monomial_absorbing_lower_bound(
        parse_with(g, oml_ideal), oml_tmax, oml_cap);
    if (g.json) {
      Json j;
      j["best_t"] = r.best_t;
      j["exhausted"] = r.exhausted;
      if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
      out << j.dump(2) << "\n";
      return;
    }
    out << "best_t = " << r.best_t << "\n";
    out << "exhausted: " << (r.exhausted ? "yes" : "no") << "\n";
    if (r.certificate)
      for (const auto& f : r.certificate->factors)
        out << "  " << f.str() << "\n";
  });

  auto* obs = orc->add_subcommand("binomial-search",
                                  "search certificates with two-term factors");
  obs->fallthrough();
  std::string obs_ideal;
  Exp obs_t = 1, obs_cap = 0;
  obs->add_option("ideal", obs_ideal, "generator list")->required();
  obs->add_option("--t", obs_t, "certificate length")->required();
  obs->add_option("--deg-cap", obs_cap,
                  "factor degree cap (default max generator degree + 1)");
  obs->callback([&] {
    auto found =
        binomial_absorbing_search(parse_with(g, obs_ideal), obs_t, obs_cap);
    if (g.json) {
      Json j;
      j["found"] = found.has_value();
      if (found) j["certificate"] = certificate_json(*found);
      out << j.dump(2) << "\n";
      return;
    }
    if (!found) {
      out << "found: no\n";
      return;
    }
    out << "found: yes\n";
    for (const auto& f : found->factors) out << "  " << f.str() << "\n";
  });

  auto* opc = orc->add_subcommand(
      "power-check", "replay the power decomposition of an irreducible ideal");
  opc->fallthrough();
  std::string opc_ideal;
  Exp opc_m = 1;
  opc->add_option("ideal", opc_ideal, "pure power generator list")->required();
  opc->add_option("--m", opc_m, "power")->required();
  opc->callback([&] {
    IrreducibleComponent t =
        IrreducibleComponent::from_ideal(parse_with(g, opc_ideal));
    bool equal = power_decomposition_check(t, opc_m);
    if (g.json)
      out << Json{{"equal", equal}}.dump(2) << "\n";
    else
      out << "power decomposition equal: " << (equal ? "yes" : "no") << "\n";
    if (!equal) rc = 1;
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("monomega");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}

}  // namespace monomega

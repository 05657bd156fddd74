#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"
#include "monomega/cli.hpp"

using namespace monomega;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("omega command text output") {
  CliRun r = run({"omega", "x^2, x*y, y^2, x*z^2", "--certificate"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "omega = 3\n"
        "method: CHAIN\n"
        "certificate (3 factors):\n"
        "  x\n"
        "  z\n"
        "  x + y + z\n");
  CHECK(r.err.empty());
}

TEST_CASE("omega command json output is stable") {
  std::vector<std::string> args{"omega", "x^2, x*y, y^2, x*z^2", "--json"};
  CliRun first = run(args);
  CliRun second = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  auto doc = nlohmann::json::parse(first.out);
  CHECK(doc["value"]["exact"] == 3);
  CHECK(doc["method"] == nlohmann::json::array({"CHAIN"}));
  CHECK(doc["certificate"]["factors"] ==
        nlohmann::json::array({"x", "z", "x + y + z"}));
}

TEST_CASE("omega verification and intervals") {
  CliRun verified = run({"omega", "x^3*y^4, x^2*y^5, x^4*y^3*z^2, "
                                  "x^5*y^3*z, x^2*y^4*z^2",
                         "--verify"});
  CHECK(verified.code == 0);
  CHECK(verified.out.find("omega = 9") == 0);
  CHECK(verified.out.find("certificate verified: yes") != std::string::npos);

  CliRun interval = run({"omega", "--vars", "x,y,z,w",
                         "x^2, x*y*w, y^2*w^2, x*z^2*w", "--json"});
  CHECK(interval.code == 0);
  auto doc = nlohmann::json::parse(interval.out);
  CHECK(doc["value"]["lo"] == 4);
  CHECK(doc["value"]["hi"] == 5);
  CHECK(doc["method"] == nlohmann::json::array({"FALLBACK_BOUNDS"}));
  CHECK(doc.contains("reasons"));
  CHECK_FALSE(doc.contains("certificate"));
}

TEST_CASE("decompose command") {
  CliRun canonical = run({"decompose", "x^2, x*y, y^2, x*z^2"});
  CHECK(canonical.code == 0);
  CHECK(canonical.out ==
        "primary components (2):\n"
        "  (x, y^2)  prime (x, y)  e = 2\n"
        "  (y, x^2, z^2)  prime (x, y, z)  e = 3\n");

  CliRun standard =
      run({"decompose", "x^4, y^3, z^2, x*y, y^2*z", "--standard"});
  CHECK(standard.code == 0);
  CHECK(standard.out.find("(x, y^2, z^2)") != std::string::npos);
  CHECK(standard.out.find("(y, z^2, x^4)") != std::string::npos);
  CHECK(standard.out.find("(x, z, y^3)") != std::string::npos);

  CliRun json = run({"decompose", "x^2, x*y, y^2, x*z^2", "--json"});
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc.size() == 2);
  CHECK(doc[0]["prime"] == nlohmann::json::array({0, 1}));
  CHECK(doc[1]["prime"] == nlohmann::json::array({0, 1, 2}));
}

TEST_CASE("noether, power, closure, and linearity commands") {
  CHECK(run({"noether", "x^3, y^2, z^2, x*y"}).out == "noether = 4\n");
  CHECK(run({"power", "2", "x, y^2"}).out == "(x^2, x*y^2, y^4)\n");

  CliRun closure = run({"closure", "x^3, x*y^2, y^4"});
  CHECK(closure.code == 0);
  CHECK(closure.out ==
        "closure = (x^3, x^2*y, x*y^2, y^4)\n"
        "integrally closed: no\n");

  CliRun linear = run({"omega-linear", "x^3, x*y^2, y^4", "--max-power", "3"});
  CHECK(linear.code == 0);
  CHECK(linear.out.find("omega-linear up to 3: yes") != std::string::npos);
}

TEST_CASE("edge ideal command reads graph files") {
  std::string graph_file = "cli_graph_tmp.txt";
  {
    std::ofstream out(graph_file);
    out << "# a five-cycle\n1 2\n2 3\n3 4\n4 5\n5 1\n";
  }
  CliRun r = run({"edge-ideal", "--graph", graph_file});
  CHECK(r.code == 0);
  CHECK(r.out.find("(x1*x2, x1*x5, x2*x3, x3*x4, x4*x5)") !=
        std::string::npos);
  CHECK(r.out.find("bipartite: no") != std::string::npos);
  CHECK(r.out.find("omega = 5") != std::string::npos);

  CliRun json = run({"edge-ideal", "--graph", graph_file, "--json"});
  auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["covers"].size() == 5);
  CHECK(doc["covers"][0] == nlohmann::json::array({1, 2, 4}));
  CHECK(doc["omega"] == 5);
  std::remove(graph_file.c_str());

  CHECK(run({"edge-ideal", "--graph", "/nonexistent-graph"}).code == 2);
}

TEST_CASE("oracle commands") {
  CliRun noether = run({"oracle", "noether", "x^3, y^2, z^2, x*y"});
  CHECK(noether.code == 0);
  CHECK(noether.out == "noether = 4\n");

  CliRun lower =
      run({"oracle", "monomial-lower", "x^2, y^2", "--t-max", "3"});
  CHECK(lower.code == 0);
  CHECK(lower.out.find("best_t = 2") == 0);

  CliRun search = run({"oracle", "binomial-search", "x^2, y^2", "--t", "3"});
  CHECK(search.code == 0);
  CHECK(search.out.find("found: yes") == 0);

  CliRun check = run({"oracle", "power-check", "x^2, y^3", "--m", "2"});
  CHECK(check.code == 0);
  CHECK(check.out == "power decomposition equal: yes\n");
}

TEST_CASE("exit codes follow the contract") {
  CHECK(run({"omega", "x^"}).code == 2);
  CHECK(run({"omega", "w^2"}).code == 2);
  CHECK(run({"omega", "--vars", "x,x", "x^2"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"decompose", "1"}).code == 3);
  CHECK(run({"power", "0", "x"}).code == 3);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"omega", "--help"}).code == 0);
}

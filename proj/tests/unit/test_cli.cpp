#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "binform/cli.hpp"
#include "corpus.hpp"

using namespace binform;
using Json = nlohmann::json;

namespace {

CommandResult call(const std::string& cmd, const std::string& poly, std::map<std::string, std::string> opts = {}) {
  return run(CommandRequest{cmd, poly, std::move(opts)});
}

Json ok(const std::string& cmd, const std::string& poly, std::map<std::string, std::string> opts = {}) {
  CommandResult r = call(cmd, poly, std::move(opts));
  REQUIRE_MESSAGE(r.exit_code == 0, r.err);
  return Json::parse(r.out);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("binform_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("decide and hamiltonian on x y^2") {
  const Json d = ok("decide", "x*y^2");
  CHECK(d["case"] == "B");
  CHECK(d["stab1_ne_stab0"] == false);
  CHECK(d["l"] == 2);
  CHECK(d["k"] == 0);
  CHECK(d["p"] == 3);
  CHECK(d["verdict"]["stab1_ne_stab0"] == false);

  const Json h = ok("hamiltonian", "x*y^2");
  CHECK(h["hamiltonian"]["F"] == Json::array({"-2*x*y", "y^2"}));
  CHECK(h["hamiltonian"]["D"] == "y");
  CHECK(h["hamiltonian"]["hFld"] == Json::array({"-2*x", "y"}));
  CHECK(h["hamiltonian"]["deg_hFld"] == 1);
}

TEST_CASE("exit codes") {
  const CommandResult nh = call("decide", "x^2 - y");
  CHECK(nh.exit_code == 1);
  const Json e = Json::parse(nh.err);
  CHECK(e["error"]["kind"] == "NotHomogeneous");
  CHECK(e["error"]["details"] == Json::array({2, 1}));

  CHECK(call("decide", "5").exit_code == 1);
  const CommandResult neg = call("decide", "x^2 - y^-1");
  CHECK(neg.exit_code == 2);
  CHECK(Json::parse(neg.err)["error"]["offset"] == 8);
  CHECK(call("frobnicate", "x").exit_code == 2);
  CHECK(call("decide", "x", {{"colour", "red"}}).exit_code == 2);
  CHECK(call("symmetry", "x", {{"tol", "-1"}}).exit_code == 2);
  CHECK(call("portrait", "x", {{"window", "1,1,0,0"}}).exit_code == 2);
  CHECK(call("portrait", "x", {{"res", "3"}}).exit_code == 2);
  CHECK(call("portrait", "x", {{"format", "png"}}).exit_code == 2);
}

TEST_CASE("schema on the corpus") {
  for (const std::string& poly : testing::load_corpus()) {
    CAPTURE(poly);
    for (const std::string& cmd : {"factor", "classify", "symmetry", "hamiltonian", "decide"}) {
      const Json j = ok(cmd, poly);
      CHECK(j["command"] == cmd);
      CHECK(j["input"] == poly);
      CHECK(j["degree"].is_number_integer());
      CHECK((j["sign"] == 1 || j["sign"] == -1));
      if (cmd == std::string("factor") || cmd == std::string("classify")) {
        CHECK(j["factors"]["linear"].is_array());
        CHECK(j["factors"]["quadratic"].is_array());
        for (const auto& lf : j["factors"]["linear"]) {
          CHECK(lf["alpha"].is_number_integer());
          CHECK((lf.contains("direction") || lf.contains("root_interval")));
        }
        for (const auto& qf : j["factors"]["quadratic"]) {
          for (const char* key : {"a", "b", "c"}) CHECK(qf[key].is_number());
          CHECK(qf["beta"].is_number_integer());
        }
      }
      if (cmd != std::string("factor")) CHECK(j["case"].is_string());
      if (cmd == std::string("symmetry")) {
        const Json& s = j["symmetry"];
        CHECK(s["kind"].is_string());
        if (s["kind"] == "FiniteCyclic") {
          CHECK(s["n"].is_number_integer());
          CHECK(s["generator"].is_array());
          CHECK(s["residual"].get<double>() < 1e-9);
        } else {
          CHECK(s.contains("family"));
        }
      }
      if (cmd == std::string("hamiltonian")) {
        for (const char* key : {"F", "D", "hFld", "deg_hFld"}) CHECK(j["hamiltonian"].contains(key));
      }
      if (cmd == std::string("decide")) {
        CHECK(j["verdict"]["stab1_ne_stab0"].is_boolean());
        CHECK(j["verdict"]["chain"].is_string());
      }
    }
  }
}

TEST_CASE("portrait files") {
  const auto svg = temp_path("p.svg");
  const Json j = ok("portrait", "x*y^2", {{"out", svg.string()}, {"res", "64"}, {"time", "3"}});
  CHECK(j["portrait"]["orbits"].size() == 8);
  const std::string s = slurp(svg);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("<polyline") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);

  const auto csv = temp_path("p.csv");
  ok("portrait", "x^2 + y^2", {{"out", csv.string()}, {"format", "csv"}, {"res", "32"}});
  const std::string c = slurp(csv);
  CHECK(c.rfind("kind,id,t_or_level,x,y\n", 0) == 0);
  CHECK(c.find("\norbit,") != std::string::npos);
  CHECK(c.find("\nlevel,") != std::string::npos);

  const auto seeds = temp_path("seeds.csv");
  {
    std::ofstream out(seeds);
    out << "x,y\n0.5,0.25\n-1,1\n";
  }
  const Json k = ok("portrait", "x*y^2", {{"seeds", seeds.string()}, {"format", "json"}, {"res", "32"}});
  CHECK(k["portrait"]["orbits"].size() == 2);

  std::filesystem::remove(svg);
  std::filesystem::remove(csv);
  std::filesystem::remove(seeds);
}

TEST_CASE("dynamics") {
  const Json j = ok("dynamics", "x^2 + y^2", {{"time", "3.141592653589793"}});
  const Json& trs = j["dynamics"]["trajectories"];
  REQUIRE(trs.size() == 8);
  for (const auto& t : trs) {
    CHECK(t["status"] == "completed");
    const double x0 = t["seed"][0], y0 = t["seed"][1];
    const double x1 = t["end"][1], y1 = t["end"][2];
    CHECK(std::hypot(x1 - x0, y1 - y0) < 1e-6);
  }
}

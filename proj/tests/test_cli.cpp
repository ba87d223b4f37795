#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "logmod/jsonio.hpp"

using namespace logmod;

namespace {

std::string cli_path() {
  const char* p = std::getenv("LOGMOD_CLI");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = "/tmp/logmod_cli_out.txt";
  std::string cmd = cli_path() + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream is(tmp);
  std::stringstream ss;
  ss << is.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("usage errors exit nonzero") {
  CHECK(run("frobnicate").code != 0);
  CHECK(run("rootdata --type Z9 --order 4").code != 0);
  CHECK(run("build --type A1 --order 4 --lattice adjoint --out /tmp/x.json").code != 0);
}

TEST_CASE("rootdata emits the advertised fields") {
  auto r = run("rootdata --type A1 --order 6 --lattice sc");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  for (const char* k : {"cartan", "symmetrizers", "r", "lattice_hnf", "scaled_gram",
                        "l_alpha", "xm_hnf", "z_invariant_factors", "dual_cartan", "rho",
                        "k_rho_trivial"})
    CHECK(j.contains(k));
  CHECK(j["r"] == 2);
}

TEST_CASE("admissibility table text and json") {
  auto r = run("admissibility-table --families A --max-rank 2 --orders 4,6 --format text");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("A1") != std::string::npos);
  auto rj = run("admissibility-table --families A --max-rank 1 --orders 4 --format json");
  REQUIRE(rj.code == 0);
  Json j = Json::parse(rj.out);
  CHECK(j.size() == 2);  // sc and adjoint rows
}

TEST_CASE("recover-degree on the zero eigendata") {
  std::ofstream os("/tmp/logmod_eig.json");
  os << R"({"type":"A1","order":6,"m_prime":[0],"n_prime":["0"]})";
  os.close();
  auto r = run("recover-degree /tmp/logmod_eig.json");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["weight"] == Json::array({0}));
}

TEST_CASE("build then verify round trip") {
  auto b = run("build --type A1 --order 4 --lattice sc --out /tmp/logmod_alg4.json");
  REQUIRE(b.code == 0);
  auto v = run("verify /tmp/logmod_alg4.json --format text");
  INFO(v.out);
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS") != std::string::npos);
  auto vj = run("verify /tmp/logmod_alg4.json --suite pentagon,counit --format json");
  REQUIRE(vj.code == 0);
  Json j = Json::parse(vj.out);
  CHECK(j["all_passed"] == true);

  // tampered beta: nonzero exit and a zigzag witness
  {
    std::ifstream is("/tmp/logmod_alg4.json");
    Json alg;
    is >> alg;
    alg["beta"][1][1] = cyc_to_json(-cyc_from_json(alg["beta"][1][1]));
    std::ofstream oo("/tmp/logmod_alg4_bad.json");
    oo << alg.dump();
  }
  auto bad = run("verify /tmp/logmod_alg4_bad.json --suite antipode --format json");
  CHECK(bad.code == 2);
  Json jb = Json::parse(bad.out);
  bool witness = false;
  for (const auto& c : jb["checks"])
    if (c["status"] == "fail" && c.contains("witness") &&
        c["name"].get<std::string>().rfind("zigzag", 0) == 0)
      witness = true;
  CHECK(witness);
}

TEST_CASE("simples output") {
  auto b = run("build --type A1 --order 4 --lattice sc --out /tmp/logmod_alg4b.json");
  REQUIRE(b.code == 0);
  auto s = run("simples /tmp/logmod_alg4b.json");
  REQUIRE(s.code == 0);
  Json j = Json::parse(s.out);
  CHECK(j["count"] == 4);
  CHECK(j["simples"].size() == 4);
  int transparent = 0;
  for (const auto& row : j["simples"]) transparent += row["transparent"].get<bool>() ? 1 : 0;
  CHECK(transparent == 1);
}

TEST_CASE("determinism: identical runs give identical bytes") {
  auto r1 = run("build --type A1 --order 4 --lattice sc --section-seed 9 --out -");
  auto r2 = run("build --type A1 --order 4 --lattice sc --section-seed 9 --out -");
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  auto v1 = run("verify /tmp/logmod_alg4.json --format json");
  auto v2 = run("verify /tmp/logmod_alg4.json --format json");
  CHECK(v1.out == v2.out);
}

TEST_CASE("json report round trips") {
  auto v = run("verify /tmp/logmod_alg4.json --suite pentagon --format json");
  REQUIRE(v.code == 0);
  Json j = Json::parse(v.out);
  CHECK(Json::parse(j.dump()) == j);
}

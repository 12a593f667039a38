#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "io.hpp"

using namespace superkit;
using io::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SUPERKIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(io::parse_rational("3") == 3);
  CHECK(io::parse_rational("-3/4") == Q(-3, 4));
  CHECK(io::parse_rational("0.25") == Q(1, 4));
  CHECK(io::parse_rational("1e-3") == Q(1, 1000));
  CHECK(io::parse_rational(" 1.5e1 ") == 15);
  CHECK_THROWS_AS(io::parse_rational("abc"), io::UsageError);
  CHECK_THROWS_AS(io::parse_rational(""), io::UsageError);
  CHECK_THROWS_AS(io::parse_rational("1/0"), io::UsageError);
}

TEST_CASE("parse_twice_spin") {
  CHECK(io::parse_twice_spin("1/2") == 1);
  CHECK(io::parse_twice_spin("3") == 6);
  CHECK(io::parse_twice_spin("1.5") == 3);
  CHECK_THROWS_AS(io::parse_twice_spin("1/3"), io::UsageError);
  CHECK_THROWS_AS(io::parse_twice_spin("-1"), io::UsageError);
}

TEST_CASE("parse_momentum") {
  auto a = io::parse_momentum("5/4,3/4,0,0");
  CHECK(a.exact.p[0] == Q(5, 4));
  CHECK(a.numeric.p[1] == 0.75);
  auto b = io::parse_momentum("[[5,4], 0.75, 0, \"1/3\"]");
  CHECK(b.exact.p[0] == Q(5, 4));
  CHECK(b.exact.p[3] == Q(1, 3));
  CHECK_THROWS_AS(io::parse_momentum("1,2,3"), io::UsageError);
  CHECK_THROWS_AS(io::parse_momentum("[1,2"), io::UsageError);
}

TEST_CASE("superfunction JSON round trip") {
  json j = json::parse(R"({"side":"position","components":{"|":[[1,0,1,0,0,0,1]],"1|1":[[0,"1/3",[5,4],[3,4],0,0,-1]]}})");
  auto f = io::superfunction_from_json(j);
  auto back = io::superfunction_from_json(io::to_json(f));
  CHECK((back - f).is_zero());
  CHECK_THROWS_AS(io::superfunction_from_json(json::parse(R"({"side":"x","components":{}})")), io::UsageError);
  CHECK_THROWS_AS(io::superfunction_from_json(json::parse(R"({"components":{"5|":[]}})")), io::UsageError);
}

TEST_CASE("report JSON carries the ledger") {
  Report r;
  r.suite = "x";
  json j = io::to_json(r);
  CHECK(j["passed"] == true);
  CHECK(j["ledger"].contains("eps"));
  CHECK(j["ledger"].contains("d2_norm"));
  CHECK(j["checks"].is_array());
}

TEST_CASE("command line exit codes") {
  CHECK(run("identities --suite nope").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("decompose --alpha 1/3 --beta 0").code == 2);
  CHECK(run("pipeline --mass 1 --momentum 2,0,0,0").code == 2);
  CHECK(run("solve --mass 1 --momentum 2,0,0,0").code == 2);
  CHECK(run("identities --suite brackets").code == 0);
  CHECK(run("pipeline --mass 1 --momentum 1,0,0,0").code == 0);
  CHECK(run("pipeline --mass 1 --momentum 1.5430806348152437,1.1752011936438014,0,0").code == 0);
}

TEST_CASE("command line JSON output") {
  auto d = run("decompose --alpha 1 --beta 1/2 --json");
  REQUIRE(d.code == 0);
  json j = json::parse(d.out);
  CHECK(j["spins"] == json({{"1/2", 1}, {"3/2", 1}}));
  CHECK(j.contains("ledger"));

  auto m = run("multiplet --sigma 0 --json");
  j = json::parse(m.out);
  CHECK(j["spins"] == json({{"0", 2}, {"1/2", 1}}));
  CHECK(j["dof"]["bosonic"] == 2);

  auto c = run("content --sigma 1 --json");
  j = json::parse(c.out);
  CHECK(j["superspins"] == json({{"1", 2}, {"1/2", 1}, {"3/2", 1}}));
  CHECK(j["dimension"] == 48);

  auto k = run("kernel --symbol chiral --momentum 5/4,3/4,0,0 --json");
  CHECK(json::parse(k.out)["kernel_dim"] == 4);
  auto s0 = run("kernel --symbol superspin0 --mass 1 --momentum 1,0,0,0 --json");
  CHECK(json::parse(s0.out)["phi_factor_is_mass_shell"] == true);

  auto o = run("orbit-classify --momentum 1,1,0,0 --json");
  CHECK(json::parse(o.out)["class"] == "NullPlus");

  auto s = run("identities --suite symbols --seed 5 --json");
  j = json::parse(s.out);
  CHECK(j["seed"] == 5);
  CHECK(j["suite"] == "symbols");
  for (auto& ch : j["checks"]) {
    CHECK(ch.contains("id"));
    CHECK(ch.contains("runtime_ms"));
    CHECK(ch["status"] == "pass");
  }

  auto w = run("wz-check --mass 1 --momentum 5/4,3/4,0,0 --N 0,2 --json");
  CHECK(w.code == 0);
  j = json::parse(w.out);
  CHECK(j["passed"] == true);
}

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const std::string cmd =
      std::string(SETFRAC_CLI_PATH) + " " + args + " > cli_out.txt 2> cli_err.txt";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp("cli_out.txt"), slurp("cli_err.txt")};
}

std::string last_line(const std::string& text) {
  const auto end = text.find_last_not_of('\n');
  const auto start = text.find_last_of('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("integrate") {
  const Run r = run("integrate --builtin sym_linear --rho 1 --grid 4");
  CHECK(r.code == 0);
  CHECK(r.out == "u,lo,hi\n0,0,0\n0.25,-0.03125,0.03125\n0.5,-0.125,0.125\n"
                 "0.75,-0.28125,0.28125\n1,-0.5,0.5\n");

  const Run half = run("integrate --builtin sym_linear --rho 0.5 --grid 256");
  CHECK(half.code == 0);
  CHECK(last_line(half.out) == "1,-0.752252778064,0.752252778064");

  write("map.json", R"({"a": 0, "b": 1, "kind": "samples", "lo": [0, -1], "hi": [0, 1]})");
  const Run file = run("integrate --input map.json --rho 2 --format json");
  CHECK(file.code == 0);
  CHECK_FALSE(nlohmann::json::parse(file.out).is_null());
}

TEST_CASE("parameter and input errors write no results") {
  const Run zero = run("integrate --builtin sym_linear --rho 0");
  CHECK(zero.code == 3);
  CHECK(zero.out.empty());
  CHECK(zero.err.find("rho > 0") != std::string::npos);

  CHECK(run("integrate --builtin sym_linear --rho 1 --grid 0").code == 3);
  CHECK(run("integrate --builtin sym_linear --rho 1 --format xml").code == 3);
  CHECK(run("integrate --rho 1 --bogus-flag").code == 3);

  write("broken.json", "{\"kind\": ");
  const Run bad = run("integrate --input broken.json --rho 1");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(run("integrate --input does_not_exist.json --rho 1").code == 2);
  CHECK(run("verify --input broken.json").code == 2);
}

TEST_CASE("verify") {
  const Run r = run("verify");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  std::set<std::string> theorems;
  for (const auto& e : doc) {
    theorems.insert(e["theorem"].get<std::string>());
    CHECK(e["pass"] == true);
  }
  CHECK(theorems.size() == 8);

  const Run low = run("verify --rho 0.5");
  CHECK(low.code == 0);
  CHECK(low.out.find("skipped (requires rho>1)") != std::string::npos);

  write("fixtures.json", R"([{"name": "wide", "kind": "affine", "a": -1, "b": 2}])");
  const Run custom = run("verify --input fixtures.json --rho 1.5");
  CHECK(custom.code == 0);
  CHECK(custom.out.find("\"wide\"") != std::string::npos);
}

TEST_CASE("verify output is byte-identical across runs") {
  CHECK(run("verify --output verify_a.json").code == 0);
  CHECK(run("verify --output verify_b.json").code == 0);
  const std::string a = slurp("verify_a.json");
  CHECK_FALSE(a.empty());
  CHECK(a == slurp("verify_b.json"));
}

TEST_CASE("inclusion") {
  const Run c = run("inclusion --builtin constant --param c=1 --alpha 1.5 --grid 1024");
  CHECK(c.code == 0);
  CHECK(last_line(c.out).rfind("1,0.752252", 0) == 0);
  CHECK(c.err.find("iterations_used=") != std::string::npos);
  CHECK(c.err.find("residual=") != std::string::npos);

  CHECK(run("inclusion --builtin constant --alpha 2.5").code == 3);

  const Run sym = run("inclusion --builtin symmetric --policy midpoint --u0 1 --u1 2 --grid 4");
  CHECK(sym.code == 0);
  CHECK(sym.err.find("iterations_used=1 ") != std::string::npos);
  CHECK(sym.out == "t,u\n0,1\n0.25,1.5\n0.5,2\n0.75,2.5\n1,3\n");

  const Run funnel = run("inclusion --builtin symmetric --policy funnel --grid 256");
  CHECK(funnel.code == 0);
  CHECK(last_line(funnel.out) == "1,-0.752252778064,0.752252778064");

  const Run diverge = run("inclusion --builtin linear_u --param L=6 --max-iter 2");
  CHECK(diverge.code == 4);
  CHECK(diverge.out.empty());
  CHECK(diverge.err.find("residual=") != std::string::npos);

  write("problem.json", R"({"alpha": 1.5, "rhs": {"kind": "time_linear"}})");
  const Run file = run("inclusion --input problem.json --grid 1024");
  CHECK(file.code == 0);
  CHECK(last_line(file.out).rfind("1,0.3009", 0) == 0);
}

TEST_CASE("selections and bounds") {
  const Run s = run("selections --builtin sym_linear --rho 1.5 --grid 8");
  CHECK(s.code == 0);
  CHECK(s.out.rfind("u,lower,upper,midpoint\n", 0) == 0);
  const Run b = run("bounds --builtin hat --rho 1.5 --grid 64");
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["entries"].size() == 3);
  CHECK(run("bounds --builtin hat --rho -1").code == 3);
}

#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MAGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::ordered_json run_json(const std::string& args, int expected_code = 0) {
  Run r = run(args + " --json");
  CHECK(r.code == expected_code);
  return nlohmann::ordered_json::parse(r.out);
}

std::string strip_timing(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  j.erase("timing_ms");
  return j.dump(2) + "\n";
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(MAGE_FIXTURES) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing fixture " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void golden(const std::string& args, const std::string& stem) {
  Run human = run(args);
  CHECK(human.code == 0);
  CHECK(human.out == fixture(stem + ".txt"));
  Run js = run(args + " --json");
  CHECK(js.code == 0);
  CHECK(strip_timing(js.out) == fixture(stem + ".json"));
}

}  // namespace

TEST_CASE("golden outputs") {
  golden("is-ma --n 2 --expr \"p11*p22 - p12^2 + p11 + 1\"", "is_ma");
  golden("bgg-kernel --n 2 --r 1", "bgg_kernel");
  golden("classify --n 2 --expr \"p11 - p22\"", "classify");
}

TEST_CASE("result envelope") {
  auto j = run_json("is-ma --n 2 --expr \"p11*p22 - p12^2 + p11 + 1\"");
  CHECK(j["schema"] == "mage/1");
  CHECK(j["command"] == "is-ma");
  CHECK(j["status"] == "ok");
  CHECK(j["timing_ms"].is_number());
  CHECK(j["result"]["on_shell_proportional"] == true);
  CHECK_FALSE(j["result"]["cofactor"].is_null());
  auto k = run_json("bgg-kernel --n 2 --r 1");
  CHECK(k["result"]["dimension"] == 5);
  CHECK(k["result"]["max_degree"] == 2);
  auto c = run_json("classify --n 2 --expr \"p11 - p22\"");
  CHECK(c["result"]["type"] == "hyperbolic");
  CHECK(c["result"]["delta"] == "4");
  CHECK(c["result"]["roots"] == nlohmann::ordered_json::array({"1", "-1"}));
}

TEST_CASE("exit codes") {
  CHECK(run("no-such-command").code == 2);
  CHECK(run("is-ma --n 2 --expr p11 --bogus").code == 2);
  CHECK(run("is-ma --n 2").code == 2);
  CHECK(run("is-ma --n 0 --expr p11").code == 2);
  CHECK(run("").code == 2);
  auto parse = run_json("is-ma --n 2 --expr \"p11 +\"", 3);
  CHECK(parse["status"] == "error");
  CHECK(parse["error"].get<std::string>().find("offset 5") != std::string::npos);
  run_json("classify --n 2 --expr \"p11 - p11*p22\"", 3);
  run_json("bgg-kernel --n 3 --r 2 --cap 100", 3);
  run_json("is-ma --n 2 --expr \"u + p1\"", 3);
}

TEST_CASE("expression from a file") {
  const std::string path = "mage_cli_expr.txt";
  {
    std::ofstream out(path);
    out << "p11 - p22\n";
  }
  auto j = run_json("classify --n 2 --expr @" + path);
  CHECK(j["result"]["type"] == "hyperbolic");
  std::remove(path.c_str());
  run_json("classify --n 2 --expr @does-not-exist.txt", 2);
}

TEST_CASE("acceptance computations are reachable") {
  auto k = run_json("bgg-kernel --n 3 --r 1");
  CHECK(k["result"]["dimension"] == 14);
  CHECK(k["result"]["max_degree"] == 3);
  auto ks = run_json("bgg-kernel --n 3 --r 1 --serial");
  CHECK(ks["result"]["basis"] == k["result"]["basis"]);
  CHECK(run_json("bgg-apply --n 2 --r 1 --expr \"p11*p22 - p12^2\"")["result"]["zero"] == true);
  CHECK(run_json("hyperplane-test --n 2 --expr \"p22 - p11^2\"")["result"]["hyperplane_section"] == false);
  auto h3 = run_json("hyperplane-test --n 3 --expr \"p11 + p11*p22*p33 - p11*p23^2 - p12^2*p33 + 2*p12*p13*p23 - p13^2*p22\"");
  CHECK(h3["result"]["hyperplane_section"] == true);
  CHECK(h3["result"]["direct_check"] == true);
  auto ff = run_json("fundamental-forms --n 2 --expr \"p22 - p11^2\" --lambda \"p11 + 2*p12\"");
  CHECK(ff["result"]["transformation_law_holds"] == true);
  auto sp = run_json("sp6-check");
  CHECK(sp["result"]["all_conformal"] == true);
  CHECK(sp["result"]["rank"] == 21);
  CHECK(sp["result"]["stretching_mu"]["text"] == "3");
  auto pl = run_json("pluecker --n 2 --point \"p11=1/2,p12=3,p22=-2\"");
  CHECK(pl["result"]["linear_relations_satisfied"] == true);
  CHECK(pl["result"]["quadric"] == "0");
  auto line = run_json("rank-one-line --n 2 --point \"p11=0,p12=0,p22=0\" --xi \"1,5/7\"");
  CHECK(line["result"]["affine"] == true);
  CHECK(run_json("phi --n 2 --expr \"p11*p22 - p12^2 + 3*p11 - 1\"")["result"]["vanishes"] == true);
  CHECK(run_json("check-system --expr \"(p12^2 - 1)/p11\"")["status"] == "ok");
  CHECK(run_json("symbol --n 2 --expr \"p11*p22 - p12^2\" --k 2")["status"] == "ok");
}

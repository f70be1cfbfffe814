#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the workbench binary with stderr folded into the captured stream.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HOOPWORK_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse_out(const RunResult& r) {
  CAPTURE(r.out);
  return nlohmann::json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("classify reports labels and honors expectations") {
  RunResult r = run_cli("classify \"lift(two0())\" --expect godel --expect '!product'");
  CHECK(r.code == 0);
  auto j = parse_out(r);
  CHECK(j["command"] == "classify");
  CHECK(j["labels"] == nlohmann::json::array({"BCIRL", "BL", "Godel"}));
  CHECK(j["expect"][0]["satisfied"] == true);
  CHECK(j["expect"][1]["negated"] == true);

  CHECK(run_cli("classify \"bool(2)\" --expect boolean").code == 0);
  CHECK(run_cli("classify \"bool(2)\" --expect '!boolean'").code == 1);
  CHECK(run_cli("classify \"godel_chain(3)\" --expect mv").code == 1);
  CHECK(run_cli("classify \"nk(1)\" --expect cancellative-hoop").code == 0);
  CHECK(run_cli("classify \"bool(2)\" --expect banana").code == 2);
}

TEST_CASE("filters enumerates finite carriers and refuses symbolic ones") {
  RunResult r = run_cli("filters \"bool(2)\" --maximal");
  CHECK(r.code == 0);
  auto j = parse_out(r);
  CHECK(j["count"] == 2);
  CHECK(j["filters"][0]["members"] == nlohmann::json::array({"a", "1"}));

  RunResult all = run_cli("filters \"godel_chain(4)\"");
  CHECK(parse_out(all)["count"] == 4);

  RunResult sym = run_cli("filters \"nk(1)\"");
  CHECK(sym.code == 2);
  CHECK(parse_out(sym).contains("error"));

  RunResult rad = run_cli("filters \"lift(nk(1))\" --radical");
  CHECK(rad.code == 0);
  CHECK(parse_out(rad)["radical"].contains("description"));
}

TEST_CASE("construct emits the result algebra with verification") {
  RunResult r = run_cli("construct mv-closure \"reduct0(mv_chain(2))\"");
  CHECK(r.code == 0);
  auto j = parse_out(r);
  CHECK(j["algebra"]["carrier"].size() == 6);
  CHECK(j["verification"][0]["status"] == "valid");

  RunResult pc = run_cli("construct product-closure \"nk(1)\"");
  CHECK(pc.code == 0);
  auto pj = parse_out(pc);
  CHECK(pj["algebra"]["builder"] == "product_closure(nk(1))");
  CHECK(pj["notes"][0]["status"] == "bounded-valid");

  RunResult tr = run_cli("construct triple \"bool(2):maxfilter1:nk(1)\"");
  CHECK(tr.code == 0);
  CHECK(parse_out(tr)["verification"][0]["status"] == "bounded-valid");

  CHECK(run_cli("construct triple \"bool(2):maxfilter7:nk(1)\"").code == 2);
  CHECK(run_cli("construct lift \"godel_chain(3)\"").code == 2);
}

TEST_CASE("construct --out writes a loadable algebra file") {
  const char* path = "cli_construct_out.json";
  RunResult r = run_cli(std::string("construct lift \"two0()\" --out ") + path);
  CHECK(r.code == 0);
  RunResult back = run_cli(std::string("classify ") + path + " --expect godel");
  std::remove(path);
  CHECK(back.code == 0);
}

TEST_CASE("verify distinguishes passing and refuted statements") {
  RunResult ej = run_cli("verify external-join \"bool(2):maxfilter0:nk(1)\"");
  CHECK(ej.code == 0);
  CHECK(parse_out(ej)["result"]["status"] == "bounded-valid");

  RunResult main_ok = run_cli("verify main \"nk(1)\" --bound 8");
  CHECK(main_ok.code == 0);

  RunResult main_bad = run_cli("verify main \"reduct0(lift(nk(1)))\" --bound 8");
  CHECK(main_bad.code == 1);
  auto j = parse_out(main_bad);
  CHECK(j["result"]["status"] == "refuted");
  CHECK(j["result"]["witness"]["x"] == "0");

  RunResult dec = run_cli("verify decomposition \"godel_chain(3)\"");
  CHECK(dec.code == 1);

  RunResult rem = run_cli("verify remark \"godel_chain(3)\"");
  CHECK(rem.code == 0);
  CHECK(parse_out(rem)["result"]["status"] == "valid");
}

TEST_CASE("hasse writes a truncated dot diagram for symbolic carriers") {
  const char* path = "cli_hasse_out.dot";
  RunResult r = run_cli(
      std::string("hasse \"construct:product-closure(reduct0(lift(nk(1))))\" --bound 4 --out ") +
      path);
  CHECK(r.code == 0);
  auto j = parse_out(r);
  CHECK(j["nodes"] == 10);
  CHECK(j["truncated"] == true);
  std::string dot = slurp(path);
  std::remove(path);
  CHECK(dot.find("truncated at bound 4") != std::string::npos);
  CHECK(dot.find("[label=\"[~0,1]\"]") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);

  const char* gpath = "cli_hasse_chain.dot";
  RunResult g = run_cli(std::string("hasse \"godel_chain(3)\" --out ") + gpath);
  CHECK(g.code == 0);
  std::string gdot = slurp(gpath);
  std::remove(gpath);
  CHECK(parse_out(g)["truncated"] == false);
  // A chain has exactly n-1 covers.
  CHECK(std::count(gdot.begin(), gdot.end(), '>') == 2);
}

TEST_CASE("eval and parse answer directly") {
  RunResult e = run_cli("eval \"godel_chain(3)\" \"x1 -> x2\" --env a,0");
  CHECK(e.code == 0);
  CHECK(parse_out(e)["value"] == "0");

  RunResult p = run_cli("parse \"x1 * x2 -> x1\"");
  CHECK(p.code == 0);
  CHECK(parse_out(p)["canonical"] == "x1 * x2 -> x1");

  CHECK(run_cli("eval \"godel_chain(3)\" \"x1\" --env zz").code == 2);
  CHECK(run_cli("parse \"x1 ->\"").code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
  for (const char* cmd : {"classify \"mv_chain(3)\"",
                          "filters \"bool(2)\"",
                          "verify main \"nk(1)\" --bound 6",
                          "construct product-closure \"nk(1)\""}) {
    CAPTURE(cmd);
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("classify").code == 2);
  CHECK(run_cli("nosuchcommand \"bool(2)\"").code == 2);
  CHECK(run_cli("classify \"frobnicate(1)\"").code == 2);
  CHECK(run_cli("--help").code == 0);
}

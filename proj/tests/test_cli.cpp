// End-to-end tests for the cyclord command-line tool: exit codes, report
// shape, constructed documents that feed back into the tool, and the
// determinism of seeded runs.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "cyclord/json_io.hpp"

using namespace cyclord;

#ifndef CYCLORD_CLI_PATH
#error "CYCLORD_CLI_PATH must point at the cyclord binary"
#endif
#ifndef CYCLORD_FIXTURES
#error "CYCLORD_FIXTURES must point at the fixtures directory"
#endif

namespace {

struct cli_result {
  int code = -1;
  std::string out;
};

cli_result run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(CYCLORD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  cli_result r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = std::move(out);
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(CYCLORD_FIXTURES) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return "/tmp/cyclord_test_" + std::to_string(getpid()) + "_" + name;
}

json as_report(const cli_result& r) {
  json j = parse_json_text(r.out);
  REQUIRE(j.contains("tool"));
  CHECK(j["tool"] == "cyclord");
  return j;
}

}  // namespace

TEST_CASE("verify accepts a valid circular order") {
  auto r = run_cli("verify " + fixture("corder_hex.json"));
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["status"] == "pass");
  CHECK(j["inputs"].size() == 1);
  CHECK(j["inputs"][0]["digest"].get<std::string>().substr(0, 6) == "fnv1a:");
  bool saw_axioms = false, saw_cut = false;
  for (const auto& e : j["results"]) {
    if (e["check"] == "circular-axioms") saw_axioms = e["status"] == "pass";
    if (e["check"] == "cut-round-trip") saw_cut = e["status"] == "pass";
  }
  CHECK(saw_axioms);
  CHECK(saw_cut);
}

TEST_CASE("verify covers the remaining document kinds") {
  CHECK(run_cli("verify " + fixture("corder_words.json")).code == 0);
  CHECK(run_cli("verify " + fixture("linorder_chain.json")).code == 0);
  CHECK(run_cli("verify " + fixture("ternary_valid.json")).code == 0);
  CHECK(run_cli("verify " + fixture("group_z6.json")).code == 0);
  CHECK(run_cli("verify " + fixture("group_s3.json")).code == 0);
  CHECK(run_cli("verify " + fixture("action_rotation.json")).code == 0);
}

TEST_CASE("a law violation is a semantic failure, exit 1") {
  auto r = run_cli("verify " + fixture("ternary_invalid.json"));
  CHECK(r.code == 1);
  json j = as_report(r);
  CHECK(j["status"] == "fail");
  bool witnessed = false;
  for (const auto& e : j["results"])
    if (e["check"] == "circular-axioms" && e["status"] == "fail")
      witnessed = e.contains("axiom") && e.contains("witness");
  CHECK(witnessed);

  auto g = run_cli("verify " + fixture("group_broken.json"));
  CHECK(g.code == 1);
  json gj = as_report(g);
  CHECK(gj["results"][0]["check"] == "group-laws");
  CHECK(gj["results"][0].contains("reason"));
}

TEST_CASE("an action that breaks the order fails order preservation only") {
  auto r = run_cli("verify " + fixture("action_reflection.json"));
  CHECK(r.code == 1);
  json j = as_report(r);
  std::string statuses;
  for (const auto& e : j["results"])
    statuses += e["check"].get<std::string>() + "=" + e["status"].get<std::string>() + ";";
  CHECK(statuses == "group-laws=pass;action-laws=pass;order-preservation=fail;");
}

TEST_CASE("malformed input is an input error, exit 2") {
  auto r = run_cli("verify " + fixture("ternary_malformed.json"));
  CHECK(r.code == 2);
  CHECK(as_report(r)["status"] == "input-error");
  CHECK(run_cli("verify /nonexistent.json").code == 2);
  CHECK(run_cli("frobnicate x").code == 2);
  CHECK(run_cli("build nonesuch --host " + fixture("corder_hex.json")).code == 2);
  CHECK(run_cli("build lex").code == 2);  // missing --base/--fiber
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("size bounds come from the flag or the environment") {
  auto flagged = run_cli("verify " + fixture("corder_hex.json") + " --max-size 3");
  CHECK(flagged.code == 2);
  CHECK(as_report(flagged)["status"] == "input-error");
  auto env = run_cli("verify " + fixture("corder_hex.json"), "CYCLORD_MAX_SIZE=3 ");
  CHECK(env.code == 2);
  CHECK(run_cli("verify " + fixture("corder_hex.json") + " --max-size 6").code == 0);
}

TEST_CASE("build lex emits a document the tool accepts back") {
  auto r = run_cli("build lex --base " + fixture("corder_hex.json") + " --fiber " +
                   fixture("linorder_pq.json"));
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["output"]["kind"] == "corder");
  CHECK(j["output"]["cycle"].size() == 12);
  for (const auto& l : j["output"]["cycle"]) {
    REQUIRE(l.is_object());
    CHECK(l.contains("pair"));
  }
  std::string path = temp_path("lex.json");
  {
    std::ofstream f(path);
    f << j["output"].dump(1) << "\n";
  }
  CHECK(run_cli("verify " + path).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("build quotient round-trips through verify") {
  std::string path = temp_path("quot.json");
  auto r = run_cli("build quotient --host " + fixture("corder_hex.json") +
                   " --markers '[0,3]' --out " + path);
  CHECK(r.code == 0);
  json j = as_report(r);
  // Two marked points plus the two arcs between them.
  CHECK(j["output"]["cycle"].size() == 4);
  CHECK(run_cli("verify " + path).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("build cover reports blocks, members, and the projection") {
  auto r = run_cli("build cover --host " + fixture("corder_hex.json") + " --markers '[0,2,4]'");
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["output"]["support"].size() == 3);
  CHECK(j["output"]["blocks"].size() == 6);
  CHECK(j["output"]["projection"].size() == 6);
  // A chain host goes through the linear-order variant of the same command.
  auto lr = run_cli("build cover --host " + fixture("linorder_chain.json") + " --markers '[\"q\"]'");
  CHECK(lr.code == 0);
  json lj = as_report(lr);
  CHECK(lj["output"]["blocks"].size() == 3);  // below q, q itself, above q
}

TEST_CASE("build cover refuses markers outside the host, exit 1") {
  auto r = run_cli("build cover --host " + fixture("corder_hex.json") + " --markers '[0,99]'");
  CHECK(r.code == 1);
  json j = as_report(r);
  CHECK(j["status"] == "fail");
  CHECK(j["results"][0].contains("reason"));
}

TEST_CASE("build tower writes a GraphViz diagram") {
  std::string dot = temp_path("tower.dot");
  auto r = run_cli("build tower --host " + fixture("corder_hex.json") +
                   " --markers '[[0,3],[1,4]]' --dot " + dot);
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["output"]["levels"].size() >= 3);  // two seeds plus their join
  CHECK(j["output"]["bondings"].size() >= 2);
  std::ifstream f(dot);
  REQUIRE(f.good());
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.find("digraph tower") != std::string::npos);
  std::remove(dot.c_str());
}

TEST_CASE("orderable says yes with a checkable certificate") {
  auto r = run_cli("orderable " + fixture("group_z6.json"));
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["output"]["orderable"] == true);
  CHECK(j["output"]["certificate"]["cycle"].size() == 6);
  // The certificate itself is a valid circular-order document.
  std::string path = temp_path("cert.json");
  {
    std::ofstream f(path);
    f << j["output"]["certificate"].dump(1) << "\n";
  }
  CHECK(run_cli("verify " + path).code == 0);
  std::remove(path.c_str());
}

TEST_CASE("orderable says no with a complete transcript") {
  auto r = run_cli("orderable " + fixture("group_s3.json"));
  CHECK(r.code == 1);
  json j = as_report(r);
  CHECK(j["output"]["orderable"] == false);
  CHECK(j["output"]["transcript"].size() == 6);
  for (const auto& row : j["output"]["transcript"]) CHECK(row[1].get<int>() < 6);
}

TEST_CASE("scenario documents run their families") {
  CHECK(run_cli("verify " + fixture("scenario_finite.json")).code == 0);
  CHECK(run_cli("verify " + fixture("scenario_cascade.json")).code == 0);
  CHECK(run_cli("verify " + fixture("scenario_sturmian.json")).code == 0);
}

TEST_CASE("seeded runs are byte-identical in their result sections") {
  auto a = run_cli("verify " + fixture("scenario_sturmian.json"));
  auto b = run_cli("verify " + fixture("scenario_sturmian.json"));
  CHECK(a.code == 0);
  json ja = as_report(a), jb = as_report(b);
  CHECK(ja["results"].dump() == jb["results"].dump());
  CHECK(ja["seed"] == jb["seed"]);
  // An explicit seed overrides the document's and still reproduces.
  auto c = run_cli("verify " + fixture("scenario_sturmian.json") + " --seed 99");
  auto d = run_cli("verify " + fixture("scenario_sturmian.json") + " --seed 99");
  json jc = as_report(c), jd = as_report(d);
  CHECK(jc["seed"] == 99);
  CHECK(jc["results"].dump() == jd["results"].dump());
}

TEST_CASE("selftest runs a named suite") {
  auto r = run_cli("selftest --suite cut");
  CHECK(r.code == 0);
  json j = as_report(r);
  CHECK(j["results"].size() == 1);
  CHECK(j["results"][0]["check"] == "suite:cut");
  CHECK(j["results"][0]["checks"].get<long long>() > 0);
  CHECK(run_cli("selftest --suite nonesuch").code == 2);
}

TEST_CASE("human output is readable text") {
  auto r = run_cli("verify " + fixture("corder_hex.json") + " --human");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("cut-round-trip") != std::string::npos);
  auto f = run_cli("verify " + fixture("ternary_invalid.json") + " --human");
  CHECK(f.code == 1);
  CHECK(f.out.find("FAIL") != std::string::npos);
}

// End-to-end tests driving the installed CLI binary through a shell, checking
// exit codes, report JSON, SVG output, and byte-for-byte determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

const fs::path kTmp = "cli_tmp";

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Runs the CLI through /bin/sh; `prefix` may carry env assignments.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
  fs::create_directories(kTmp);
  fs::path out = kTmp / "stdout.txt", err = kTmp / "stderr.txt";
  std::string cmd = prefix + (prefix.empty() ? "" : " ") + "\"" DYCONVEX_CLI_PATH "\" " + args +
                    " >" + out.string() + " 2>" + err.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_points(const std::string& name, const std::string& body) {
  fs::create_directories(kTmp);
  fs::path p = kTmp / name;
  spit(p, body);
  return p;
}

fs::path interval_013() {
  return write_points("i013.txt", "# one dimensional generators\ndim 1\n0\n1\n3\n");
}

}  // namespace

TEST_CASE("member decides and reports") {
  fs::path gens = interval_013();
  auto yes = run_cli("member --gens " + gens.string() + " --point 2");
  CHECK(yes.exit_code == 0);
  Json doc = Json::parse(yes.out);
  CHECK(doc["op"] == "member");
  CHECK(doc["result"]["member"] == true);
  CHECK(doc["evidence"]["in_hull"] == true);

  auto no = run_cli("member --gens " + gens.string() + " --point 4");
  CHECK(no.exit_code == 3);
  CHECK(Json::parse(no.out)["result"]["member"] == false);

  auto off_lattice = run_cli("member --gens " +
                             write_points("i03.txt", "dim 1\n0\n3\n").string() + " --point 1");
  CHECK(off_lattice.exit_code == 3);
  Json offdoc = Json::parse(off_lattice.out);
  CHECK(offdoc["evidence"]["in_hull"] == true);
  CHECK(offdoc["evidence"]["face_subspace"]["invariants"][0] == "3");
}

TEST_CASE("report keys keep a fixed order") {
  auto r = run_cli("member --gens " + interval_013().string() + " --point 2");
  size_t op = r.out.find("\"op\"");
  size_t inputs = r.out.find("\"inputs\"");
  size_t result = r.out.find("\"result\"");
  size_t certificate = r.out.find("\"certificate\"");
  size_t evidence = r.out.find("\"evidence\"");
  CHECK(op != std::string::npos);
  CHECK(op < inputs);
  CHECK(inputs < result);
  CHECK(result < certificate);
  CHECK(certificate < evidence);
}

TEST_CASE("usage and parse failures exit 1") {
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("member --gens nope.txt --point 1").exit_code == 1);
  CHECK(run_cli("member --point 1").exit_code == 1);
  CHECK(run_cli("closure --gens " + interval_013().string() + " --exp-cap -1 --slack 0").exit_code == 1);
  auto bad = run_cli("member --gens " + write_points("bad.txt", "dim 1\n0\n1/3\n").string() +
                     " --point 0");
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("error:") != std::string::npos);
  // Dimension mismatch between the point and the generators.
  CHECK(run_cli("member --gens " + interval_013().string() + " --point 1,1").exit_code == 1);
  CHECK(run_cli("classify triangle").exit_code == 1);
  CHECK(run_cli("gens").exit_code == 1);
  CHECK(run_cli("verify --example bogus").exit_code == 1);
}

TEST_CASE("closure reports the reachable points") {
  fs::path gens = write_points("i01.txt", "dim 1\n0\n1\n");
  auto r = run_cli("closure --gens " + gens.string() + " --exp-cap 2 --slack 0");
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["result"]["count"] == 5);
  CHECK(doc["result"]["points"] == Json::array({"0", "1*2^0", "1*2^-1", "1*2^-2", "3*2^-2"}));
  CHECK(doc["evidence"]["saturated"] == true);

  auto gapped = run_cli("closure --gens " + write_points("i03.txt", "dim 1\n0\n3\n").string() +
                        " --exp-cap 1 --slack 0");
  CHECK(Json::parse(gapped.out)["result"]["points"] == Json::array({"0", "3*2^0", "3*2^-1"}));
}

TEST_CASE("closure output is byte identical across runs") {
  fs::path gens = write_points("tri.txt", "dim 2\n0, 0\n1, 3\n3, 0\n1, 1\n");
  auto a = run_cli("closure --gens " + gens.string() + " --exp-cap 3 --slack 2");
  auto b = run_cli("closure --gens " + gens.string() + " --exp-cap 3 --slack 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("closure renders an exact SVG") {
  fs::path gens = write_points("corner.txt", "dim 2\n0, 0\n1, 0\n0, 1\n");
  fs::path svg = kTmp / "scene.svg";
  auto r = run_cli("closure --gens " + gens.string() + " --exp-cap 2 --slack 0 --svg " + svg.string());
  CHECK(r.exit_code == 0);
  std::string scene = slurp(svg);
  CHECK(scene.rfind("<svg xmlns=", 0) == 0);
  CHECK(scene.find("viewBox=\"-0.1 -1.1 1.2 1.2\"") != std::string::npos);
  CHECK(scene.find("cx=\"0.75\"") != std::string::npos);  // found point 3/4 in exact decimal
  CHECK(scene.find("</svg>") != std::string::npos);
  CHECK(Json::parse(r.out)["evidence"]["svg"] == svg.string());

  // SVG needs planar input.
  CHECK(run_cli("closure --gens " + interval_013().string() +
                " --exp-cap 1 --slack 0 --svg " + (kTmp / "no.svg").string())
            .exit_code == 1);
}

TEST_CASE("closure honors the point limit") {
  fs::path gens = write_points("corner.txt", "dim 2\n0, 0\n1, 0\n0, 1\n");
  auto r = run_cli("closure --gens " + gens.string() + " --exp-cap 6 --slack 4",
                   "DYCONVEX_POINT_LIMIT=10");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("resource limit:") != std::string::npos);
}

TEST_CASE("gens synthesizes and reduces") {
  auto seg = run_cli("gens --polytope " + write_points("i09.txt", "dim 1\n0\n9\n").string());
  CHECK(seg.exit_code == 0);
  Json segdoc = Json::parse(seg.out);
  CHECK(segdoc["result"]["validated"] == true);
  CHECK(segdoc["result"]["count"] == 3);

  auto tri = run_cli("gens --polytope " +
                     write_points("t23.txt", "dim 2\n0, 0\n3, 0\n0, 1\n").string() + " --reduce");
  CHECK(tri.exit_code == 0);
  Json tridoc = Json::parse(tri.out);
  CHECK(tridoc["result"]["validated"] == true);
  CHECK(tridoc["result"]["count"] == 4);

  auto semi = run_cli("gens --semipolytope " +
                      write_points("tri.txt", "dim 2\n0, 0\n1, 3\n3, 0\n1, 1\n").string() +
                      " --reduce");
  CHECK(semi.exit_code == 0);
  Json semidoc = Json::parse(semi.out);
  CHECK(semidoc["result"]["validated"] == true);
  CHECK(semidoc["result"]["count"] == 4);
  CHECK(!semidoc["certificate"]["construction_log"].empty());

  auto again = run_cli("gens --semipolytope " + (kTmp / "tri.txt").string() + " --reduce");
  CHECK(again.out == semi.out);
}

TEST_CASE("classify interval") {
  auto r = run_cli("classify interval --gens " + interval_013().string());
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["result"]["type_k"] == "3");
  CHECK(doc["result"]["lattice_step"] == "1*2^0");
  CHECK(doc["result"]["endpoints"] == Json::array({"0", "3*2^0"}));
}

TEST_CASE("classify triangle by parameters") {
  auto r = run_cli("classify triangle --params 0,3,3,0");
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["result"]["class"] == "right");
  CHECK(doc["result"]["boundary"] == Json::array({"3", "3", "3"}));
  CHECK(run_cli("classify triangle --params 1,2,3,4").exit_code == 1);
  CHECK(run_cli("classify triangle --params 1,2,3").exit_code == 1);
}

TEST_CASE("classify triangle by vertices") {
  fs::path verts = write_points("chain.txt", "dim 2\n0, 0\n12, 15\n15, 12\n");
  auto r = run_cli("classify triangle --vertices " + verts.string());
  CHECK(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["result"]["class"] == "other");
  CHECK(doc["result"]["params"] == Json::array({"12", "15", "15", "12"}));
  CHECK(doc["certificate"].contains("witness"));
  bool small_tuple = false;
  for (const auto& c : doc["evidence"]["candidates"]) {
    if (c["params"] == Json::array({"1", "9", "2", "0"})) {
      small_tuple = true;
      CHECK(c["reduced_odd_content"] == true);
    }
  }
  CHECK(small_tuple);
}

TEST_CASE("verify bundles all pass") {
  for (const std::string name :
       {"notdpol", "qpol", "right333", "hat31560", "polygon-example", "disc", "matrices",
        "normalization-chain", "hat-generators-probe"}) {
    auto r = run_cli("verify --example " + name);
    INFO("bundle ", name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS " + name) != std::string::npos);
  }
}

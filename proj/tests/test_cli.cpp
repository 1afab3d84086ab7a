#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rfg/cli.hpp"

using namespace rfg;
using Json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_args(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"rfgrow"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::ofstream f(name);
  f << content;
  return name;
}

std::string z_file() { return write_file("cli_z.grp", "gens: a\n"); }
std::string free2_file() { return write_file("cli_free2.grp", "gens: a,b\n"); }
std::string surface_file() {
  return write_file("cli_surface.grp", "gens: a,b,c,d\nrels: [a,b][c,d]\n");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("growth emits the pinned csv columns and values") {
  CliResult r = run_args({"growth", "--pres", free2_file(), "--class", "GL", "--limit", "200",
                          "--radius", "3", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "m,class,value,argmax_word,witness_group,exhausted_flag,tag");
  CHECK(lines[1] == "1,GL,2,a,\"GL(1,3)\",false,exact");
  CHECK(lines[2] == "2,GL,3,aa,\"GL(1,4)\",false,exact");
  CHECK(lines[3] == "3,GL,3,aa,\"GL(1,4)\",false,exact");
}

TEST_CASE("detect reports the least simple quotient as json") {
  CliResult r = run_args({"detect", "--pres", z_file(), "--word", "a^6", "--class", "SIMPLE",
                          "--limit", "100", "--format", "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["subcommand"] == "detect");
  CHECK(doc["word"] == "a^6");
  REQUIRE(doc["rows"].size() == 1);
  const Json& row = doc["rows"][0];
  CHECK(row["order"] == 5);
  CHECK(row["witness_group"] == "Cyclic(5)");
  CHECK(row["exhausted_flag"] == false);
  CHECK(row["tag"] == "exact");
  REQUIRE(doc.contains("witness_images"));
  CHECK(doc["witness_images"].size() == 1);
}

TEST_CASE("atlas resolves split family flags and renders rank rows") {
  CliResult js = run_args({"atlas", "--family", "C", "--n", "4", "--q", "3", "--format", "json"});
  REQUIRE(js.code == 0);
  Json doc = Json::parse(js.out);
  CHECK(doc["family"] == "C(4,3)");
  CHECK(doc["entry"]["r"]["exact"] == 8);
  CHECK(doc["entry"]["simple"] == true);

  CliResult full = run_args({"atlas", "--family", "C(4,3)", "--format", "json"});
  REQUIRE(full.code == 0);
  CHECK(full.out == js.out);

  CliResult csv = run_args({"atlas", "--family", "C(4,3)", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("r,8,exact") != std::string::npos);
  CHECK(csv.out.find("\"[8, 64]\"") != std::string::npos);
}

TEST_CASE("output bytes do not depend on repetition or the parallelism degree") {
  std::string pres = free2_file();
  std::vector<std::string> base = {"growth", "--pres",   pres, "--class", "ALL",
                                   "--limit", "20",      "--radius", "3",
                                   "--format", "json"};
  CliResult serial = run_args(base);
  REQUIRE(serial.code == 0);
  std::vector<std::string> wide = base;
  wide.insert(wide.end(), {"--jobs", "4"});
  CliResult threaded = run_args(wide);
  REQUIRE(threaded.code == 0);
  CliResult again = run_args(wide);
  CHECK(serial.out == threaded.out);
  CHECK(threaded.out == again.out);
}

TEST_CASE("config file supplies defaults and flags override it") {
  std::string pres = free2_file();
  write_file("cli_growth.cfg", "format=csv\n[growth]\nlimit=12\nradius=2\n");
  CliResult base =
      run_args({"growth", "--config", "cli_growth.cfg", "--pres", pres, "--class", "ALL"});
  REQUIRE(base.code == 0);
  std::vector<std::string> lines = lines_of(base.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "m,class,value,argmax_word,witness_group,exhausted_flag,tag");
  CHECK(lines[1] == "1,ALL,2,a,Cyclic(2),false,exact");
  CHECK(lines[2] == "2,ALL,3,aa,Cyclic(3),false,exact");

  CliResult over = run_args({"growth", "--config", "cli_growth.cfg", "--pres", pres, "--class",
                             "ALL", "--radius", "3", "--format", "json"});
  REQUIRE(over.code == 0);
  Json doc = Json::parse(over.out);
  CHECK(doc["limit"] == 12);
  CHECK(doc["radius"] == 3);
  CHECK(doc["rows"].size() == 3);
}

TEST_CASE("table format aligns columns without trailing spaces") {
  CliResult r = run_args({"growth", "--pres", free2_file(), "--class", "GL", "--limit", "200",
                          "--radius", "2", "--format", "table"});
  REQUIRE(r.code == 0);
  std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "m  class  value  argmax_word  witness_group  exhausted_flag  tag");
  for (const std::string& line : lines) {
    REQUIRE_FALSE(line.empty());
    CHECK(line.back() != ' ');
  }
  CHECK(lines[1].find("GL(1,3)") != std::string::npos);

  CliResult dflt = run_args({"growth", "--pres", free2_file(), "--class", "GL", "--limit",
                             "200", "--radius", "2"});
  REQUIRE(dflt.code == 0);
  CHECK(dflt.out == r.out);
}

TEST_CASE("error classes map to distinct exit codes with structured records") {
  std::string pres = free2_file();

  CliResult unknown = run_args({"bogus"});
  CHECK(unknown.code == 2);
  CHECK(Json::parse(unknown.err)["error"] == "input");

  CliResult missing = run_args({"growth", "--pres", "cli_no_such_file.grp"});
  CHECK(missing.code == 2);
  Json rec = Json::parse(missing.err);
  CHECK(rec["error"] == "input");
  CHECK(rec["message"].get<std::string>().find("cli_no_such_file.grp") != std::string::npos);

  CliResult badclass = run_args({"growth", "--pres", pres, "--class", "BOGUS"});
  CHECK(badclass.code == 2);

  CliResult resource = run_args({"growth", "--pres", pres, "--class", "SIMPLE", "--limit",
                                 "360", "--radius", "4", "--hom-budget", "10"});
  CHECK(resource.code == 4);
  CHECK(Json::parse(resource.err)["error"] == "resource");

  CliResult unsupported = run_args({"growth", "--pres", surface_file(), "--gens", "a,b"});
  CHECK(unsupported.code == 5);
  CHECK(Json::parse(unsupported.err)["error"] == "unsupported");

  CliResult exhausted = run_args({"certify", "--pres", pres, "--words", "a,a", "--kmax", "0"});
  CHECK(exhausted.code == 6);
  CHECK(Json::parse(exhausted.err)["error"] == "search-exhausted");
}

TEST_CASE("certify reports the small-cancellation certificate") {
  CliResult r = run_args({"certify", "--pres", surface_file(), "--format", "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["mode"] == "small-cancellation");
  CHECK(doc["certificate"]["certified"] == true);
  CHECK(doc["certificate"]["max_piece"] == 1);
  CHECK(doc["certificate"]["lambda"] == "1/6");
  CHECK(doc["certificate"]["violation"].is_null());

  CliResult csv = run_args({"certify", "--pres", surface_file(), "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("certified,true,exact") != std::string::npos);
}

TEST_CASE("certify builds a verified common multiple with audit rows") {
  CliResult r = run_args(
      {"certify", "--pres", free2_file(), "--words", "a,b", "--kmax", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["mode"] == "common-multiple");
  const Json& cert = doc["certificate"];
  CHECK(cert["word"] == "ABab");
  CHECK(cert["length"] == 4);
  CHECK(cert["verified"] == true);
  CHECK(cert["witnesses"].size() == 2);
  CHECK(cert["audit"]["cap"].get<double>() == doctest::Approx(128.0));
  bool saw_verified = false;
  for (const Json& row : doc["rows"]) {
    if (row["key"] == "verified") {
      saw_verified = true;
      CHECK(row["value"] == true);
    }
  }
  CHECK(saw_verified);
}

TEST_CASE("induce lists coset data and builds the induced representation") {
  CliResult r = run_args({"induce", "--pres", free2_file(), "--target", "Cyclic(2)", "--images",
                          "[1,0];[0,1]", "--base", "[[1]];[[2]];[[1]]", "--base-q", "3",
                          "--format", "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["index"] == 2);
  CHECK(doc["transversal"] == Json::array({"1", "a"}));
  CHECK(doc["schreier_generators"] == Json::array({"b", "aa", "abA"}));
  CHECK(doc["dim"] == 2);
  CHECK(doc["q"] == 3);
  CHECK(doc["images"]["a"] == "[[0,1],[2,0]]");
  CHECK(doc["images"]["b"] == "[[1,0],[0,1]]");
  CHECK(doc["size_check"]["ok"] == true);
  CHECK(doc["size_check"]["asserted"] == false);
  CHECK(doc["size_check"]["bound"] == "256");

  CliResult csv = run_args({"induce", "--pres", free2_file(), "--target", "Cyclic(2)",
                            "--images", "[1,0];[0,1]", "--base", "[[1]];[[2]];[[1]]", "--base-q",
                            "3", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("image_a,\"[[0,1],[2,0]]\",exact") != std::string::npos);

  CliResult bare = run_args(
      {"induce", "--pres", free2_file(), "--target", "Cyclic(2)", "--images", "[1,0];[0,1]",
       "--format", "json"});
  REQUIRE(bare.code == 0);
  Json bdoc = Json::parse(bare.out);
  CHECK_FALSE(bdoc.contains("dim"));
  CHECK(bdoc["rows"].size() == 5);
}

TEST_CASE("experiment emits one ratio row per j") {
  CliResult r = run_args({"experiment", "--pres", free2_file(), "--word", "a", "--word0", "ab",
                          "--jmax", "3", "--kmax", "2", "--class", "SIMPLE", "--limit", "360",
                          "--format", "json"});
  REQUIRE(r.code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc["truncated"] == false);
  REQUIRE(doc["rows"].size() == 2);
  CHECK(doc["rows"][0]["j"] == 2);
  CHECK(doc["rows"][1]["j"] == 3);
  for (const Json& row : doc["rows"]) {
    CHECK(row["eta_length"].get<long>() > 0);
    CHECK(row["detected_order"].get<long>() >= 2);
    CHECK(row["exhausted_flag"] == false);
    CHECK(row["ratio"].get<double>() > 0.0);
  }

  CliResult csv = run_args({"experiment", "--pres", free2_file(), "--word", "a", "--word0",
                            "ab", "--jmax", "2", "--kmax", "2", "--class", "SIMPLE", "--limit",
                            "360", "--format", "csv"});
  REQUIRE(csv.code == 0);
  std::vector<std::string> lines = lines_of(csv.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "j,eta_length,fitted_cubic,detected_order,witness_group,image_order,ratio,"
        "exhausted_flag,tag");
}

TEST_CASE("help exits cleanly and names every subcommand") {
  CliResult r = run_args({"--help"});
  CHECK(r.code == 0);
  for (const char* name : {"growth", "detect", "atlas", "certify", "induce", "experiment"})
    CHECK(r.out.find(name) != std::string::npos);
}

TEST_CASE("the seed flag is accepted and changes nothing") {
  std::string pres = z_file();
  CliResult plain = run_args(
      {"detect", "--pres", pres, "--word", "a^6", "--class", "SIMPLE", "--limit", "100",
       "--format", "json"});
  CliResult seeded = run_args({"detect", "--pres", pres, "--word", "a^6", "--class", "SIMPLE",
                               "--limit", "100", "--format", "json", "--seed", "42"});
  REQUIRE(plain.code == 0);
  REQUIRE(seeded.code == 0);
  CHECK(plain.out == seeded.out);
}

TEST_CASE("run rejects malformed configurations") {
  std::ostringstream out;
  std::ostringstream err;

  RunConfig bad_format;
  bad_format.subcommand = "growth";
  bad_format.format = "yaml";
  CHECK(run(bad_format, out, err) == 2);

  RunConfig bad_budget;
  bad_budget.subcommand = "growth";
  bad_budget.hom_budget = 0;
  CHECK(run(bad_budget, out, err) == 2);

  RunConfig bad_jobs;
  bad_jobs.subcommand = "growth";
  bad_jobs.jobs = 0;
  CHECK(run(bad_jobs, out, err) == 2);

  RunConfig bad_sub;
  bad_sub.subcommand = "frobnicate";
  CHECK(run(bad_sub, out, err) == 2);
}

#include "alcove/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/fusion.hpp"
#include "alcove/table_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace alcove;
namespace fs = std::filesystem;

namespace {

// Redirects std::cout / std::cerr for the duration of one invocation.
struct CaptureStreams {
  std::ostringstream out, err;
  std::streambuf* old_out;
  std::streambuf* old_err;
  CaptureStreams()
      : old_out(std::cout.rdbuf(out.rdbuf())), old_err(std::cerr.rdbuf(err.rdbuf())) {}
  ~CaptureStreams() {
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
  }
};

int run(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr) {
  std::vector<const char*> argv{"alcove"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  CaptureStreams cap;
  int code = run_cli(static_cast<int>(argv.size()), argv.data());
  if (out) *out = cap.out.str();
  if (err) *err = cap.err.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("alcove-cli-test-" + name);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("datum subcommand prints the invariants") {
  std::string out;
  CHECK(run({"datum", "--family", "A", "--rank", "2"}, &out) == 0);
  CHECK(contains(out, "name A2\n"));
  CHECK(contains(out, "rank 2\n"));
  CHECK(contains(out, "positive_roots 3\n"));
  CHECK(contains(out, "coxeter_number 3\n"));
  CHECK(contains(out, "weyl_order 6\n"));
  CHECK(contains(out, "cartan_det 3\n"));
  CHECK(contains(out, "index_of_connection 3\n"));
  CHECK(contains(out, "highest_root 1 1\n"));

  CHECK(run({"datum", "--family", "E", "--rank", "8"}, &out) == 0);
  CHECK(contains(out, "positive_roots 120\n"));
  CHECK(contains(out, "weyl_order 696729600\n"));
}

TEST_CASE("domains subcommand prints sizes and writes JSON") {
  fs::path json = temp_file("domains.json");
  std::string out;
  CHECK(run({"domains", "--family", "A", "--rank", "2", "-l", "5", "--json",
             json.string()},
            &out) == 0);
  CHECK(contains(out, "\nX 6\n"));
  CHECK(contains(out, "\nXhat 7\n"));
  CHECK(contains(out, "\nXbar 7\n"));
  CHECK(contains(out, "\nXreg 2\n"));
  CHECK(contains(out, "xhat_outside_X 1\n"));

  nlohmann::json j = nlohmann::json::parse(slurp(json));
  CHECK(j["family"] == "A");
  CHECK(j["rank"] == 2);
  CHECK(j["l"] == 5);
  CHECK(j["X"].size() == 6);
  CHECK(j["Xhat"].size() == 7);
  CHECK(j["Xbar"].size() == 7);
  CHECK(j["Xreg"].size() == 2);
  CHECK(j["xhat_outside_X"] == 1);
  fs::remove(json);

  // Domain enumeration has no CSV form.
  std::string err;
  CHECK(run({"domains", "--family", "A", "--rank", "1", "-l", "5", "--csv",
             temp_file("domains.csv").string()},
            &out, &err) == 2);
  CHECK(contains(err, "error:"));
}

TEST_CASE("fusion table round-trips through JSON and is deterministic") {
  RootDatum a2 = build_root_datum(Family::A, 2, CacheConfig::disabled());
  FusionTable expected = build_table(a2, 5, TableKind::VR_MINUS);

  fs::path first = temp_file("fusion1.json");
  fs::path second = temp_file("fusion2.json");
  std::vector<std::string> args{"fusion", "--family", "A", "--rank", "2", "-l", "5"};
  CHECK(run([&] { auto a = args; a.insert(a.end(), {"--json", first.string()}); return a; }()) == 0);
  CHECK(run([&] { auto a = args; a.insert(a.end(), {"--json", second.string()}); return a; }()) == 0);

  std::string text1 = slurp(first);
  CHECK(text1 == slurp(second));
  CHECK(table_from_json(text1) == expected);
  fs::remove(first);
  fs::remove(second);

  // Without an output path the same JSON goes to stdout.
  std::string out1, out2;
  CHECK(run(args, &out1) == 0);
  CHECK(run(args, &out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1 == text1);
}

TEST_CASE("fusion table round-trips through CSV with its basis sibling") {
  RootDatum a1 = build_root_datum(Family::A, 1, CacheConfig::disabled());
  FusionTable expected = build_table(a1, 5, TableKind::VR_MINUS);

  fs::path csv = temp_file("fusion.csv");
  fs::path basis = temp_file("fusion.basis.csv");
  CHECK(run({"fusion", "--family", "A", "--rank", "1", "-l", "5", "--csv",
             csv.string()}) == 0);
  REQUIRE(fs::exists(csv));
  REQUIRE(fs::exists(basis));

  std::string table_csv = slurp(csv);
  CHECK(contains(table_csv, "i,j,k,n\n"));
  std::string basis_csv = slurp(basis);
  CHECK(contains(basis_csv, "index,c0\n"));
  CHECK(table_from_csv(TableKind::VR_MINUS, "A", 1, 5, table_csv, basis_csv) ==
        expected);
  fs::remove(csv);
  fs::remove(basis);
}

TEST_CASE("vrplus subcommand emits the orbit-sum table") {
  RootDatum a1 = build_root_datum(Family::A, 1, CacheConfig::disabled());
  std::string out;
  CHECK(run({"vrplus", "--family", "A", "--rank", "1", "-l", "5"}, &out) == 0);
  FusionTable parsed = table_from_json(out);
  CHECK(parsed == build_table(a1, 5, TableKind::VR_PLUS));
  CHECK(parsed.constant(1, 1, 0) == 2);
}

TEST_CASE("prbar subcommand lists the projective basis") {
  fs::path json = temp_file("prbar.json");
  CHECK(run({"prbar", "--family", "A", "--rank", "1", "-l", "5", "--json",
             json.string()}) == 0);
  nlohmann::json j = nlohmann::json::parse(slurp(json));
  CHECK(j["labels"] == nlohmann::json::parse("[[0],[1],[2]]"));
  REQUIRE(j["elements"].size() == 3);
  // St * f(1) reduces to 2[f(0)] + 2[f(1)] + 2[f(3)].
  nlohmann::json want = nlohmann::json::parse(
      R"([{"mu":[0],"c":"2"},{"mu":[1],"c":"2"},{"mu":[3],"c":"2"}])");
  CHECK(j["elements"][1] == want);
  fs::remove(json);
}

TEST_CASE("verify subcommand reports pass lines and exit status") {
  std::string out;
  CHECK(run({"verify", "bj", "socle", "--family", "A", "--rank", "1", "-l", "5"},
            &out) == 0);
  CHECK(contains(out, "[PASS] bj:"));
  CHECK(contains(out, "[PASS] socle:"));
  CHECK(contains(out, "(A1, l=5)"));
  CHECK(!contains(out, "[FAIL]"));

  std::string err;
  CHECK(run({"verify", "bogus", "--family", "A", "--rank", "1", "-l", "5"}, &out,
            &err) == 2);
  CHECK(contains(err, "unknown verification selector"));
}

TEST_CASE("usage and validation failures exit with code 2") {
  std::string out, err;
  // Level must be odd, coprime to the connection index, and >= Coxeter number.
  CHECK(run({"domains", "--family", "A", "--rank", "2", "-l", "6"}, &out, &err) == 2);
  CHECK(contains(err, "error:"));
  CHECK(run({"domains", "--family", "A", "--rank", "2", "-l", "3"}, &out, &err) == 2);
  // Unsupported rank (D3 is excluded).
  CHECK(run({"datum", "--family", "D", "--rank", "3"}, &out, &err) == 2);
  // Unknown flag, missing subcommand, and mutually exclusive outputs.
  CHECK(run({"datum", "--nope"}, &out, &err) == 2);
  CHECK(run({}, &out, &err) == 2);
  CHECK(run({"fusion", "--family", "A", "--rank", "1", "-l", "5", "--json",
             temp_file("x.json").string(), "--csv", temp_file("x.csv").string()},
            &out, &err) == 2);
}

TEST_CASE("cache-info lists an empty cache directory") {
  fs::path dir = temp_file("cache-dir");
  fs::create_directories(dir);
  std::string out;
  CHECK(run({"cache-info", "--cache", dir.string()}, &out) == 0);
  CHECK(contains(out, "dir " + dir.string() + "\n"));
  CHECK(contains(out, "files 0\n"));
  fs::remove_all(dir);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CommandResult {
  int status = -1;
  std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
  CommandResult res;
  std::string cmd = std::string(CENSUS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

}  // namespace

TEST_CASE("run emits the expected CSV rows") {
  auto r = run_cli("run --p-min 11 --p-max 17");
  CHECK(r.status == 0);
  CHECK(r.output ==
        "p,L,U,exact,ratio\n"
        "11,10,10,*,0\n"
        "13,12,12,*,0\n"
        "17,48,48,*,0\n");

  auto r23 = run_cli("run --p-min 23 --p-max 23");
  CHECK(r23.status == 0);
  CHECK(r23.output == "p,L,U,exact,ratio\n23,143,154,*,0.020793\n");
}

TEST_CASE("empty range gives just the header") {
  auto r = run_cli("run --p-min 12 --p-max 12");
  CHECK(r.status == 0);
  CHECK(r.output == "p,L,U,exact,ratio\n");
}

TEST_CASE("output is identical across jobs settings") {
  auto serial = run_cli("run --p-min 11 --p-max 67 --jobs 1");
  auto parallel = run_cli("run --p-min 11 --p-max 67 --jobs 4");
  CHECK(serial.status == 0);
  CHECK(parallel.status == 0);
  CHECK(serial.output == parallel.output);
}

TEST_CASE("json format carries the weight reports") {
  auto r = run_cli("run --p-min 23 --p-max 23 --format json");
  CHECK(r.status == 0);
  auto parsed = nlohmann::json::parse(r.output);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const auto& row = parsed[0];
  CHECK(row["p"] == 23);
  CHECK(row["L"] == 143);
  CHECK(row["U"] == 154);
  CHECK(row["exact"] == true);
  CHECK(row["ratio"] == "0.020793");
  REQUIRE(row["weights"].is_array());
  const auto& w12 = row["weights"][0];
  CHECK(w12["k"] == 12);
  CHECK(w12["n_k"] == 1);
  CHECK(w12["e_count"] == 1);
  CHECK(w12["p_good_r"] == 2);
  CHECK(w12["split_bound"] == 1);
  CHECK(w12["dihedral"] == 1);
}

TEST_CASE("verify classifies rows and keeps exit status zero") {
  auto r = run_cli("verify --p-max 19");
  CHECK(r.status == 0);
  CHECK(r.output.find("PASS p=11") != std::string::npos);
  CHECK(r.output.find("PASS p=17") != std::string::npos);
  CHECK(r.output.find("KNOWN-DISCREPANCY p=19") != std::string::npos);
  CHECK(r.output.find("computed L=72* U=72") != std::string::npos);
  CHECK(r.output.find("table L=108* U=108") != std::string::npos);
  CHECK(r.output.find(", 0 fail") != std::string::npos);
}

TEST_CASE("verify at 97: clean passes below 19, annotated rows in between") {
  auto r = run_cli("verify --p-max 97");
  CHECK(r.status == 0);
  std::size_t first_known = r.output.find("KNOWN-DISCREPANCY");
  REQUIRE(first_known != std::string::npos);
  CHECK(r.output.find("KNOWN-DISCREPANCY p=19") == first_known);
  for (const char* p : {"19", "31", "43", "67", "79"})
    CHECK(r.output.find("KNOWN-DISCREPANCY p=" + std::string(p) + ":") !=
          std::string::npos);
  CHECK(r.output.find(", 5 known-discrepancy") != std::string::npos);
  CHECK(r.output.find(", 0 fail") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("run --p-min 7 --p-max 11").status == 2);
  CHECK(run_cli("run --p-min 11 --p-max 13 --format yaml").status == 2);
  CHECK(run_cli("run --p-min 11 --p-max 13 --r-max 2").status == 2);
  CHECK(run_cli("run --p-min 11 --p-max 501").status == 2);  // needs --long-run
  CHECK(run_cli("verify --p-max 2003 --long-run").status == 2);
  CHECK(run_cli("cache-warm --k-max 12 --r-max 3").status == 2);  // missing --cache
  CHECK(run_cli("bogus-subcommand").status == 2);
}

TEST_CASE("unwritable output exits with code 3") {
  auto r = run_cli("run --p-min 11 --p-max 13 --out /nonexistent-dir/out.csv");
  CHECK(r.status == 3);
}

TEST_CASE("cache warm subcommand reports the file count") {
  fs::path dir = fs::temp_directory_path() / "galrep_cli_cache_test";
  fs::remove_all(dir);
  auto r = run_cli("cache-warm --k-max 12 --r-max 3 --cache " + dir.string());
  CHECK(r.status == 0);
  CHECK(r.output == "wrote 1 cache entries\n");
  auto again = run_cli("cache-warm --k-max 12 --r-max 3 --cache " + dir.string());
  CHECK(again.output == "wrote 0 cache entries\n");
  std::ifstream in(dir / "charpoly_k12_n2.txt");
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(all == "12 2\n1\n24 1\n");
  fs::remove_all(dir);
}

TEST_CASE("run picks up a warmed cache directory") {
  fs::path dir = fs::temp_directory_path() / "galrep_cli_cache_reuse";
  fs::remove_all(dir);
  auto warm = run_cli("cache-warm --k-max 24 --r-max 4 --cache " + dir.string());
  CHECK(warm.status == 0);
  auto r = run_cli("run --p-min 11 --p-max 23 --cache " + dir.string());
  CHECK(r.status == 0);
  CHECK(r.output.find("23,143,154,*,0.020793") != std::string::npos);
  fs::remove_all(dir);
}

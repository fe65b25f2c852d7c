#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <thread>

#include "galrep/charpoly_cache.hpp"

using galrep::CharpolyCache;
using galrep::charpoly_cache_filename;
using galrep::IntPoly;
using galrep::read_charpoly_file;
using galrep::write_charpoly_file;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("galrep_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cache file format for the weight-12 T_2 charpoly") {
  TempDir tmp;
  CharpolyCache cache(tmp.path);
  std::size_t written = cache.warm(12, 3);
  CHECK(written == 1);

  fs::path file = charpoly_cache_filename(tmp.path, 12, 2);
  REQUIRE(fs::exists(file));
  std::ifstream in(file);
  std::string line1, line2, line3;
  std::getline(in, line1);
  std::getline(in, line2);
  std::getline(in, line3);
  CHECK(line1 == "12 2");
  CHECK(line2 == "1");
  CHECK(line3 == "24 1");  // x + 24
}

TEST_CASE("warm writes each key once") {
  TempDir tmp;
  CharpolyCache cache(tmp.path);
  // even k in 12..30 with nonzero dim: {12,16,18,20,22,24,26,28,30}, r in {2,3}
  CHECK(cache.warm(30, 4) == 18);
  CHECK(cache.warm(30, 4) == 0);
  CharpolyCache fresh(tmp.path);
  CHECK(fresh.warm(30, 4) == 0);
}

TEST_CASE("round trip through the file format") {
  TempDir tmp;
  IntPoly computed;
  {
    CharpolyCache cache(tmp.path);
    computed = *cache.hecke_charpoly(24, 2);
  }
  CharpolyCache reloaded(tmp.path);
  CHECK(*reloaded.hecke_charpoly(24, 2) == computed);

  auto direct = read_charpoly_file(charpoly_cache_filename(tmp.path, 24, 2), 24, 2);
  REQUIRE(direct.has_value());
  CHECK(*direct == computed);
}

TEST_CASE("mismatched or corrupt cache files are rejected") {
  TempDir tmp;
  fs::path file = charpoly_cache_filename(tmp.path, 12, 2);
  write_charpoly_file(file, 12, 2, IntPoly({mpz_class(24), mpz_class(1)}));
  CHECK_THROWS(read_charpoly_file(file, 12, 3));
  {
    std::ofstream out(file);
    out << "12 2\n5\n1 2\n";  // truncated coefficient list
  }
  CHECK_THROWS(read_charpoly_file(file, 12, 2));
  CHECK_FALSE(read_charpoly_file(tmp.path / "missing.txt", 12, 2).has_value());
}

TEST_CASE("concurrent lookups agree") {
  CharpolyCache cache;
  std::vector<std::thread> workers;
  std::vector<IntPoly> results(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&cache, &results, t] {
      results[t] = *cache.hecke_charpoly(24 + 2 * (t % 3), 2 + t % 2);
    });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t)
    CHECK(results[t] == *cache.hecke_charpoly(24 + 2 * (t % 3), 2 + t % 2));
}

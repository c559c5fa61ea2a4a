#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fusion/table_io.hpp"

using namespace fusion;

namespace {

constexpr Algebra kAll[] = {Algebra::A2, Algebra::C2, Algebra::G2};

FusionTable table(Algebra a, int k) { return fusion_table(Alcove(root_system(a), k)); }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("fusionring-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cache keys depend on algebra and level") {
  CHECK(cache_key(Algebra::A2, 1) == cache_key(Algebra::A2, 1));
  CHECK(cache_key(Algebra::A2, 1) != cache_key(Algebra::A2, 2));
  CHECK(cache_key(Algebra::A2, 1) != cache_key(Algebra::G2, 1));
  CHECK(cache_key(Algebra::C2, 3).size() == 16);
  CHECK(weight_label({2, 1}) == "2·ω1+1·ω2");
}

TEST_CASE("json is byte-stable and round-trips") {
  for (Algebra a : kAll)
    for (int k = 0; k <= 4; ++k) {
      const auto t = table(a, k);
      const auto text = table_to_json(t);
      CHECK(text == table_to_json(table(a, k)));
      const auto parsed = table_from_json(text);
      CHECK(parsed.key == cache_key(a, k));
      CHECK(parsed.table == t);
    }
}

TEST_CASE("json schema fields") {
  const auto text = table_to_json(table(Algebra::G2, 0));
  CHECK(text.find("\"algebra\": \"G2\"") != std::string::npos);
  CHECK(text.find("\"h_dual\": 4") != std::string::npos);
  CHECK(text.find("\"alcove\": [[0, 0]]") != std::string::npos);
  CHECK(text.find("[0, 0, 0, 1]") != std::string::npos);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(table_from_json("not json"), std::runtime_error);
  CHECK_THROWS_AS(table_from_json("{}"), std::runtime_error);
  auto text = table_to_json(table(Algebra::A2, 1));
  text.replace(text.find("[0, 1]"), 6, "[1, 1]");
  CHECK_THROWS_AS(table_from_json(text), std::runtime_error);
}

TEST_CASE("json, csv and pretty carry the same numbers") {
  for (Algebra a : kAll)
    for (int k = 0; k <= 3; ++k) {
      const auto t = table(a, k);
      const auto& alc = t.alcove();
      std::istringstream csv(table_to_csv(t));
      std::string line;
      std::getline(csv, line);
      CHECK(line == "lambda,mu,nu,N");
      std::size_t rows = 0;
      while (std::getline(csv, line)) {
        std::size_t l, m, v;
        long long n;
        char c1, c2, c3;
        std::istringstream row(line);
        row >> l >> c1 >> m >> c2 >> v >> c3 >> n;
        CHECK(t.N(l, m, v) == n);
        ++rows;
      }
      CHECK(rows == t.size() * t.size() * t.size());

      const auto parsed = table_from_json(table_to_json(t));
      CHECK(parsed.table.constants() == t.constants());

      const auto pretty = table_to_pretty(t);
      for (std::size_t l = 0; l < t.size(); ++l)
        for (std::size_t m = l; m < t.size(); ++m) {
          std::string expect = "[" + weight_label(alc[l]) + "] x [" + weight_label(alc[m]) + "] =";
          bool any = false;
          for (std::size_t v = 0; v < t.size(); ++v) {
            const auto n = t.N(l, m, v);
            if (n == 0) continue;
            expect += any ? " + " : " ";
            if (n != 1) expect += std::to_string(n) + " ";
            expect += "[" + weight_label(alc[v]) + "]";
            any = true;
          }
          CHECK(pretty.find(expect + "\n") != std::string::npos);
        }
    }
}

TEST_CASE("cache round-trip and stale keys") {
  TempDir dir;
  const TableCache cache(dir.path);
  CHECK_FALSE(cache.load(Algebra::C2, 2).has_value());
  const auto computed = cache.load_or_compute(Algebra::C2, 2);
  CHECK(std::filesystem::exists(cache.path_for(Algebra::C2, 2)));
  CHECK(cache.path_for(Algebra::C2, 2).filename() == "c2_k2.json");
  const auto loaded = cache.load(Algebra::C2, 2);
  REQUIRE(loaded);
  CHECK(*loaded == computed);
  CHECK(*loaded == table(Algebra::C2, 2));
  CHECK_FALSE(std::filesystem::exists(dir.path / "c2_k2.json.tmp"));

  auto text = slurp(cache.path_for(Algebra::C2, 2));
  const auto key = cache_key(Algebra::C2, 2);
  text.replace(text.find(key), key.size(), std::string(16, '0'));
  std::ofstream(cache.path_for(Algebra::C2, 2), std::ios::binary | std::ios::trunc) << text;
  CHECK_FALSE(cache.load(Algebra::C2, 2).has_value());
  CHECK(cache.load_or_compute(Algebra::C2, 2) == computed);
  CHECK(cache.load(Algebra::C2, 2).has_value());

  std::ofstream(cache.path_for(Algebra::G2, 1), std::ios::binary | std::ios::trunc) << "{ broken";
  CHECK_THROWS_AS(cache.load(Algebra::G2, 1), std::runtime_error);
}

TEST_CASE("default cache directory comes from the environment") {
  ::setenv("FUSIONRING_CACHE_DIR", "/tmp/somewhere", 1);
  CHECK(TableCache::default_dir() == std::filesystem::path("/tmp/somewhere"));
  ::setenv("FUSIONRING_CACHE_DIR", "", 1);
  CHECK_FALSE(TableCache::default_dir().has_value());
  ::unsetenv("FUSIONRING_CACHE_DIR");
  CHECK_FALSE(TableCache::default_dir().has_value());
}

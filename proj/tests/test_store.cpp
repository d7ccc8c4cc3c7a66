#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hgo/catalog_store.hpp"
#include "hgo/enumerate.hpp"

using namespace hgo;
namespace fs = std::filesystem;

namespace {

fs::path freshDir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("hgo_store_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void patchLine(const fs::path& p, int lineNo, const std::string& replacement) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  in.close();
  lines.at(lineNo) = replacement;
  std::ofstream out(p, std::ios::trunc);
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace

TEST_CASE("deterministic file names") {
  CHECK(catalogFileName({CatalogKind::Graphs, false, 4, 1, 1, false}) == "u_g_n4_v1_e1_all.cat");
  CHECK(catalogFileName({CatalogKind::Orbits, true, 3, 2, 5, true}) == "d_o_n3_v2_e5_conn.cat");
}

TEST_CASE("store then load round trips, including the pinned header") {
  fs::path dir = freshDir("roundtrip");
  Catalog c = generateGraphs(4, 1, 1, false, false);
  fs::path file = storeCatalog(c, dir);
  CHECK(file.filename() == "u_g_n4_v1_e1_all.cat");

  std::string text = slurp(file);
  CHECK(text.rfind("# hgo-catalog v1 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 12);  // header + 11 keys

  auto back = loadCatalog(c.desc, dir);
  REQUIRE(back.has_value());
  CHECK(back->desc == c.desc);
  CHECK(back->keys == c.keys);
  CHECK(back->indexOf(c.keys[3]) == 3);
  fs::remove_all(dir);
}

TEST_CASE("re-storing an identical catalog is a no-op") {
  fs::path dir = freshDir("noop");
  Catalog c = generateGraphs(3, 1, 1, false, false);
  fs::path file = storeCatalog(c, dir);
  std::string before = slurp(file);
  auto stamp = fs::last_write_time(file);
  storeCatalog(c, dir);
  CHECK(slurp(file) == before);
  CHECK(fs::last_write_time(file) == stamp);
  fs::remove_all(dir);
}

TEST_CASE("missing file loads as absent") {
  fs::path dir = freshDir("absent");
  CHECK(!loadCatalog({CatalogKind::Graphs, false, 4, 1, 1, false}, dir).has_value());
  fs::remove_all(dir);
}

TEST_CASE("corruption is detected, never silently used") {
  Catalog c = generateGraphs(4, 1, 1, false, false);

  fs::path dir = freshDir("corrupt");
  fs::path file = storeCatalog(c, dir);

  SUBCASE("truncated body") {
    std::string text = slurp(file);
    std::ofstream out(file, std::ios::trunc);
    out << text.substr(0, text.size() - 25);
  }
  SUBCASE("trailing content") {
    std::ofstream out(file, std::ios::app);
    out << "0,0,0,0,0,0,1,1,1,1\n";
  }
  SUBCASE("bad version") { patchLine(file, 0, "# hgo-catalog v9 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11"); }
  SUBCASE("descriptor mismatch") { patchLine(file, 0, "# hgo-catalog v1 directed=1 kind=g n=4 vc=1 ec=1 conn=0 count=11"); }
  SUBCASE("malformed key") { patchLine(file, 3, "0,0,zap,0,0,0,0,0,1,0"); }
  SUBCASE("wrong key length") { patchLine(file, 3, "0,0,0"); }
  SUBCASE("unsorted body") { patchLine(file, 1, "9,9,9,9,9,9,9,9,9,9"); }

  CHECK_THROWS_AS(loadCatalog(c.desc, dir), Error);
  try {
    loadCatalog(c.desc, dir);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CorruptCatalog);
  }
  fs::remove_all(dir);
}

TEST_CASE("unusable cache directory") {
  fs::path dir = freshDir("blocked");
  std::ofstream(dir / "plainfile") << "x";
  Catalog c = generateGraphs(3, 1, 1, false, false);
  CHECK_THROWS_AS(storeCatalog(c, dir / "plainfile"), Error);
  try {
    storeCatalog(c, dir / "plainfile");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CacheDirMissing);
  }
  fs::remove_all(dir);
}

TEST_CASE("cache directory resolution order") {
  ::setenv("HGO_CACHE_DIR", "/tmp/hgo_env_cache", 1);
  CHECK(resolveCacheDir(fs::path("/tmp/explicit")) == fs::path("/tmp/explicit"));
  CHECK(resolveCacheDir(std::nullopt) == fs::path("/tmp/hgo_env_cache"));
  ::unsetenv("HGO_CACHE_DIR");
  fs::path fallback = resolveCacheDir(std::nullopt);
  CHECK(fallback.filename() == "hgo");
}

TEST_CASE("generation reuses the cache without canonical work") {
  fs::path dir = freshDir("reuse");
  GenerateOptions opts;
  opts.cacheDir = dir;

  resetCanonicalSearchCount();
  Catalog cold = generateOrbits(4, 1, 1, false, true, opts);
  CHECK(canonicalSearchCount() > 0);

  resetCanonicalSearchCount();
  Catalog warm = generateOrbits(4, 1, 1, false, true, opts);
  CHECK(canonicalSearchCount() == 0);
  CHECK(warm.keys == cold.keys);
  CHECK(warm.desc == cold.desc);

  // intermediates are cached as well: (3,1,1) and (4,1,1) full graph catalogs
  CHECK(fs::exists(dir / "u_g_n3_v1_e1_all.cat"));
  CHECK(fs::exists(dir / "u_g_n4_v1_e1_all.cat"));
  CHECK(fs::exists(dir / "u_g_n4_v1_e1_conn.cat"));
  CHECK(fs::exists(dir / "u_o_n4_v1_e1_conn.cat"));
  fs::remove_all(dir);
}

// Command-line front end: canonical keys, catalog generation, orbit and
// graphlet counting over host graph files.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hgo/canonical.hpp"
#include "hgo/catalog_store.hpp"
#include "hgo/count.hpp"
#include "hgo/enumerate.hpp"
#include "hgo/host_format.hpp"

namespace {

int exitCodeFor(hgo::Errc code) {
  switch (code) {
    case hgo::Errc::ParseError:
    case hgo::Errc::IoError:
      return 2;
    case hgo::Errc::OrderTooLarge:
    case hgo::Errc::TypeTooLarge:
      return 4;
    case hgo::Errc::CorruptCatalog:
      return 5;
    default:
      return 3;  // validation
  }
}

struct Timer {
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!enabled_) return;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
    std::fprintf(stderr, "time: %.3fs\n", elapsed.count());
  }
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

hgo::ColoredGraph readHost(const std::string& path, bool forceDirected) {
  hgo::ColoredGraph g = hgo::readHostGraphFile(path);
  if (forceDirected && !g.directed()) return g.asDirected();
  return g;
}

void printCounts(const hgo::CountVector& counts, bool dense) {
  for (std::size_t i = 0; i < counts.counts.size(); ++i) {
    if (dense || counts.counts[i] != 0)
      std::cout << i << ":" << counts.counts[i] << "\n";
  }
  std::cout << "total=" << counts.total() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical forms, catalogs, and exact census of colored graphlet orbits"};
  app.require_subcommand(1);

  // --- canonical ---
  std::string canFile;
  int canRef = -1;
  bool canHasRef = false, canDirected = false, canTime = false;
  int canMaxOrder = 10;
  auto* canonical = app.add_subcommand("canonical", "print the canonical key of a host graph");
  canonical->add_option("file", canFile, "host graph file")->required();
  auto* refOpt = canonical->add_option("--ref", canRef, "anchor vertex: print the orbit key instead");
  canonical->add_flag("--directed", canDirected, "treat the graph as a digraph");
  canonical->add_flag("--time", canTime, "log wall time to stderr");
  canonical->add_option("--max-order", canMaxOrder, "canonical search guard (default 10)");

  // --- generate ---
  int genN = 0, genVc = 1, genEc = 1, genMaxOrder = 5;
  std::size_t genMaxCatalog = 10'000'000;
  bool genOrbits = false, genConnected = false, genDirected = false, genTime = false;
  std::string genOut, genCacheDir;
  auto* generate = app.add_subcommand("generate", "generate the catalog of a type (n, vc, ec)");
  generate->add_option("-n", genN, "graph order")->required();
  generate->add_option("--vcolors", genVc, "vertex palette size (default 1)");
  generate->add_option("--ecolors", genEc, "edge palette size (default 1)");
  generate->add_flag("--orbits", genOrbits, "generate orbits instead of graphs");
  generate->add_flag("--connected", genConnected, "restrict to connected graphs");
  generate->add_flag("--directed", genDirected, "digraph catalog");
  generate->add_option("--out", genOut, "write the catalog to this file instead of stdout");
  generate->add_option("--cache-dir", genCacheDir, "catalog cache directory");
  generate->add_flag("--time", genTime, "log wall time to stderr");
  generate->add_option("--max-order", genMaxOrder, "generation guard on n (default 5)");
  generate->add_option("--max-catalog", genMaxCatalog, "guard on catalog size (default 10^7)");

  // --- count ---
  std::string cntFile, cntCacheDir;
  int cntRef = -1, cntK = 0, cntVc = 1, cntEc = 1, cntJobs = 1, cntMaxOrder = 5;
  bool cntGraphlets = false, cntConnected = false, cntDirected = false, cntTime = false;
  bool cntDense = false, cntSparse = false;
  auto* count = app.add_subcommand("count", "exact census of orbit occurrences in a host graph");
  count->add_option("file", cntFile, "host graph file")->required();
  count->add_option("-k", cntK, "order of the counted graphlets")->required();
  auto* cntRefOpt = count->add_option("--ref", cntRef, "anchor vertex for orbit counts");
  auto* cntGraphletsOpt =
      count->add_flag("--graphlets", cntGraphlets, "count whole graphlets instead of orbits");
  cntRefOpt->excludes(cntGraphletsOpt);
  count->add_option("--vcolors", cntVc, "vertex palette size (default 1)");
  count->add_option("--ecolors", cntEc, "edge palette size (default 1)");
  count->add_flag("--connected", cntConnected, "count connected subgraphs only");
  count->add_flag("--directed", cntDirected, "treat the host as a digraph");
  auto* denseOpt = count->add_flag("--dense", cntDense, "print every index, including zeros");
  auto* sparseOpt = count->add_flag("--sparse", cntSparse, "print nonzero entries only (default)");
  denseOpt->excludes(sparseOpt);
  count->add_option("--cache-dir", cntCacheDir, "catalog cache directory");
  count->add_option("--jobs", cntJobs, "worker threads (default 1)");
  count->add_flag("--time", cntTime, "log wall time to stderr");
  count->add_option("--max-order", cntMaxOrder, "generation guard on k (default 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (canonical->parsed()) {
      Timer timer(canTime);
      hgo::ColoredGraph g = readHost(canFile, canDirected);
      hgo::CanonicalOptions copts;
      copts.maxOrder = canMaxOrder;
      canHasRef = refOpt->count() > 0;
      hgo::Key key = canHasRef ? hgo::canonicalOrbit(g, canRef, copts) : hgo::canonicalGraph(g, copts);
      std::cout << hgo::keyToString(key) << "\n";
    } else if (generate->parsed()) {
      Timer timer(genTime);
      hgo::GenerateOptions opts;
      opts.maxOrder = genMaxOrder;
      opts.maxCatalogSize = genMaxCatalog;
      opts.cacheDir = hgo::resolveCacheDir(
          genCacheDir.empty() ? std::nullopt
                              : std::optional<std::filesystem::path>(genCacheDir));
      hgo::Catalog catalog =
          genOrbits ? hgo::generateOrbits(genN, genVc, genEc, genDirected, genConnected, opts)
                    : hgo::generateGraphs(genN, genVc, genEc, genDirected, genConnected, opts);
      if (genOut.empty()) {
        hgo::writeCatalog(catalog, std::cout);
      } else {
        std::ofstream out(genOut, std::ios::binary | std::ios::trunc);
        hgo::writeCatalog(catalog, out);
        out.flush();
        if (!out) hgo::fail(hgo::Errc::IoError, "cannot write " + genOut);
      }
    } else if (count->parsed()) {
      Timer timer(cntTime);
      hgo::ColoredGraph host = readHost(cntFile, cntDirected);
      hgo::CountOptions opts;
      opts.jobs = cntJobs;
      opts.generate.maxOrder = cntMaxOrder;
      opts.generate.cacheDir = hgo::resolveCacheDir(
          cntCacheDir.empty() ? std::nullopt
                              : std::optional<std::filesystem::path>(cntCacheDir));
      if (!cntGraphlets && cntRefOpt->count() == 0)
        hgo::fail(hgo::Errc::InvalidArgument, "orbit counting needs --ref (or use --graphlets)");
      hgo::CountVector counts =
          cntGraphlets
              ? hgo::countGraphlets(host, cntK, cntVc, cntEc, cntConnected, opts)
              : hgo::countOrbits(host, cntRef, cntK, cntVc, cntEc, cntConnected, opts);
      printCounts(counts, cntDense);
    }
  } catch (const hgo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#ifndef HGO_COUNT_HPP
#define HGO_COUNT_HPP

#include <cstdint>
#include <vector>

#include "hgo/catalog.hpp"
#include "hgo/enumerate.hpp"

namespace hgo {

struct CountOptions {
  int jobs = 1;  // worker threads for the subset sweep; result is schedule-independent
  GenerateOptions generate;
};

struct CountVector {
  CatalogDescriptor desc;
  std::vector<std::uint64_t> counts;  // one entry per catalog index

  std::uint64_t total() const;
};

// Exact census of orbit occurrences anchored at `ref`: for every
// (k-1)-subset S of V\{ref}, the induced subgraph on [ref] ++ sorted(S) is
// canonicalized with ref at position 0 and tallied against the orbit catalog.
// Host colors must fit the catalog palette; with connectedOnly, disconnected
// subgraphs are skipped.
CountVector countOrbits(const ColoredGraph& host, int ref, int k, int vertexColors,
                        int edgeColors, bool connectedOnly, const CountOptions& opts = {});
CountVector countOrbits(const ColoredGraph& host, int ref, const Catalog& catalog,
                        int jobs = 1);

// Same census over all k-subsets against the graph catalog.
CountVector countGraphlets(const ColoredGraph& host, int k, int vertexColors, int edgeColors,
                           bool connectedOnly, const CountOptions& opts = {});
CountVector countGraphlets(const ColoredGraph& host, const Catalog& catalog, int jobs = 1);

}  // namespace hgo

#endif  // HGO_COUNT_HPP

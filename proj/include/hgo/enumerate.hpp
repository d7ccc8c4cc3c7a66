#ifndef HGO_ENUMERATE_HPP
#define HGO_ENUMERATE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>

#include "hgo/canonical.hpp"
#include "hgo/catalog.hpp"

namespace hgo {

struct GenerateOptions {
  // Catalog sizes explode with order; larger requests are rejected unless the
  // caller raises the guard.
  int maxOrder = 5;
  std::size_t maxCatalogSize = 10'000'000;
  // When set, catalogs (including pipeline intermediates) are loaded from and
  // stored to this directory, so repeated calls skip canonicalization.
  std::optional<std::filesystem::path> cacheDir;
  CanonicalOptions canonical;
};

// All isomorphism classes of colored graphs of order exactly n with vertex
// colors in [0, vertexColors) and edge colors in {0} u [1, edgeColors].
// Built in stages: brute-force base of order <= 3 with one vertex color and
// at most two edge colors, then edge-color expansions, then vertex
// expansions, then vertex colorings, deduplicating canonically after each
// stage. connectedOnly filters the finished catalog.
Catalog generateGraphs(int n, int vertexColors, int edgeColors, bool directed,
                       bool connectedOnly, const GenerateOptions& opts = {});

// canonicalOrbit(g, v) for every graph g of the corresponding graph catalog
// and every vertex v, deduplicated and sorted. connectedOnly filters on the
// host graph's connectivity.
Catalog generateOrbits(int n, int vertexColors, int edgeColors, bool directed,
                       bool connectedOnly, const GenerateOptions& opts = {});

// One pipeline stage each. Inputs must be full (not connected-filtered)
// graph catalogs; outputs are canonically deduplicated.

// Every way of recoloring any subset of edge slots with a new color index
// (palette grows by one).
Catalog expandEdgeColor(const Catalog& in, const CanonicalOptions& copts = {});
// Every attachment pattern of one new vertex (color 0), including all-absent.
Catalog expandVertex(const Catalog& in, const CanonicalOptions& copts = {});
// Every assignment of vertex colors from a palette of the given size.
Catalog expandVertexColors(const Catalog& in, int vertexColors,
                           const CanonicalOptions& copts = {});

}  // namespace hgo

#endif  // HGO_ENUMERATE_HPP

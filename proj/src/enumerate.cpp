#include "hgo/enumerate.hpp"

#include <cstdint>
#include <utility>

#include "hgo/catalog_store.hpp"

namespace hgo {

namespace {

std::vector<std::pair<int, int>> edgeSlots(int n, bool directed) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  return slots;
}

// Mixed-radix odometer; returns false once all digits wrapped to zero.
bool nextAssignment(std::vector<int>& digits, int base) {
  for (int& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

void validateType(int n, int vertexColors, int edgeColors) {
  if (n < 1 || vertexColors < 1 || edgeColors < 1)
    fail(Errc::InvalidArgument, "type requires n >= 1, vertexColors >= 1, edgeColors >= 1");
}

void guardOrder(int n, const GenerateOptions& opts) {
  if (n > opts.maxOrder)
    fail(Errc::TypeTooLarge, "order " + std::to_string(n) + " exceeds the generation guard of " +
                                 std::to_string(opts.maxOrder) +
                                 " (raise GenerateOptions::maxOrder / --max-order to override)");
}

void guardSize(std::size_t size, const GenerateOptions& opts) {
  if (size > opts.maxCatalogSize)
    fail(Errc::TypeTooLarge,
         "catalog of " + std::to_string(size) + " keys exceeds the guard of " +
             std::to_string(opts.maxCatalogSize) +
             " (raise GenerateOptions::maxCatalogSize / --max-catalog to override)");
}

void requireExpandable(const Catalog& in) {
  if (in.desc.kind != CatalogKind::Graphs || in.desc.connectedOnly)
    fail(Errc::InvalidArgument, "expansion requires a full (unfiltered) graph catalog");
}

// All graphs of order n <= 3 with one vertex color and edge colors up to
// edgeColors <= 2, by exhaustive assignment over the edge slots.
Catalog bruteBase(int n, int edgeColors, bool directed, const CanonicalOptions& copts) {
  auto slots = edgeSlots(n, directed);
  std::vector<Key> keys;
  ColoredGraph g(n, directed);
  std::vector<int> digits(slots.size(), 0);
  do {
    for (std::size_t s = 0; s < slots.size(); ++s)
      g.setEdgeColor(slots[s].first, slots[s].second, digits[s]);
    keys.push_back(canonicalGraph(g, copts));
  } while (nextAssignment(digits, edgeColors + 1));
  return Catalog::fromKeys({CatalogKind::Graphs, directed, n, 1, edgeColors, false},
                           std::move(keys));
}

// Full catalogs of order exactly n. Recursion peels the pipeline stages in
// reverse: vertex colorings outermost, then vertex additions, then edge-color
// additions at the base order, with every intermediate catalog cached.
Catalog generateGraphsAll(int n, int vertexColors, int edgeColors, bool directed,
                          const GenerateOptions& opts) {
  CatalogDescriptor desc{CatalogKind::Graphs, directed, n, vertexColors, edgeColors, false};
  if (opts.cacheDir)
    if (auto cached = loadCatalog(desc, *opts.cacheDir)) return std::move(*cached);

  Catalog out;
  if (vertexColors > 1)
    out = expandVertexColors(generateGraphsAll(n, 1, edgeColors, directed, opts), vertexColors,
                             opts.canonical);
  else if (n > 3)
    out = expandVertex(generateGraphsAll(n - 1, 1, edgeColors, directed, opts), opts.canonical);
  else if (edgeColors > 2)
    out = expandEdgeColor(generateGraphsAll(n, 1, edgeColors - 1, directed, opts), opts.canonical);
  else
    out = bruteBase(n, edgeColors, directed, opts.canonical);

  guardSize(out.size(), opts);
  if (opts.cacheDir) storeCatalog(out, *opts.cacheDir);
  return out;
}

}  // namespace

Catalog generateGraphs(int n, int vertexColors, int edgeColors, bool directed, bool connectedOnly,
                       const GenerateOptions& opts) {
  validateType(n, vertexColors, edgeColors);
  guardOrder(n, opts);
  if (!connectedOnly) return generateGraphsAll(n, vertexColors, edgeColors, directed, opts);

  CatalogDescriptor desc{CatalogKind::Graphs, directed, n, vertexColors, edgeColors, true};
  if (opts.cacheDir)
    if (auto cached = loadCatalog(desc, *opts.cacheDir)) return std::move(*cached);
  Catalog all = generateGraphsAll(n, vertexColors, edgeColors, directed, opts);
  std::vector<Key> keep;
  for (const Key& key : all.keys)
    if (isConnected(deserialize(key, directed))) keep.push_back(key);
  Catalog out = Catalog::fromKeys(desc, std::move(keep));
  if (opts.cacheDir) storeCatalog(out, *opts.cacheDir);
  return out;
}

Catalog generateOrbits(int n, int vertexColors, int edgeColors, bool directed, bool connectedOnly,
                       const GenerateOptions& opts) {
  validateType(n, vertexColors, edgeColors);
  guardOrder(n, opts);
  CatalogDescriptor desc{CatalogKind::Orbits, directed, n, vertexColors, edgeColors,
                         connectedOnly};
  if (opts.cacheDir)
    if (auto cached = loadCatalog(desc, *opts.cacheDir)) return std::move(*cached);

  Catalog hosts = generateGraphs(n, vertexColors, edgeColors, directed, connectedOnly, opts);
  std::vector<Key> keys;
  keys.reserve(hosts.size() * n);
  for (const Key& hostKey : hosts.keys) {
    ColoredGraph g = deserialize(hostKey, directed);
    for (int v = 0; v < n; ++v) keys.push_back(canonicalOrbit(g, v, opts.canonical));
  }
  Catalog out = Catalog::fromKeys(desc, std::move(keys));
  guardSize(out.size(), opts);
  if (opts.cacheDir) storeCatalog(out, *opts.cacheDir);
  return out;
}

Catalog expandEdgeColor(const Catalog& in, const CanonicalOptions& copts) {
  requireExpandable(in);
  const bool directed = in.desc.directed;
  const int newColor = in.desc.edgeColors + 1;
  auto slots = edgeSlots(in.desc.order, directed);
  if (slots.size() >= 63) fail(Errc::TypeTooLarge, "too many edge slots to expand");
  std::vector<Key> keys;
  for (const Key& key : in.keys) {
    const ColoredGraph g = deserialize(key, directed);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
      ColoredGraph h = g;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1) h.setEdgeColor(slots[s].first, slots[s].second, newColor);
      keys.push_back(canonicalGraph(h, copts));
    }
  }
  CatalogDescriptor desc = in.desc;
  desc.edgeColors = newColor;
  return Catalog::fromKeys(desc, std::move(keys));
}

Catalog expandVertex(const Catalog& in, const CanonicalOptions& copts) {
  requireExpandable(in);
  const bool directed = in.desc.directed;
  const int n = in.desc.order;
  const int base = in.desc.edgeColors + 1;
  std::vector<Key> keys;
  for (const Key& key : in.keys) {
    const ColoredGraph g = deserialize(key, directed);
    ColoredGraph grown(n + 1, directed);
    for (int v = 0; v < n; ++v) grown.setVertexColor(v, g.vertexColor(v));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && g.edgeColor(u, v) != 0) grown.setEdgeColor(u, v, g.edgeColor(u, v));
    std::vector<int> digits(directed ? 2 * n : n, 0);
    do {
      ColoredGraph h = grown;
      for (int v = 0; v < n; ++v) {
        if (directed) {
          h.setEdgeColor(n, v, digits[2 * v]);
          h.setEdgeColor(v, n, digits[2 * v + 1]);
        } else {
          h.setEdgeColor(n, v, digits[v]);
        }
      }
      keys.push_back(canonicalGraph(h, copts));
    } while (nextAssignment(digits, base));
  }
  CatalogDescriptor desc = in.desc;
  desc.order = n + 1;
  return Catalog::fromKeys(desc, std::move(keys));
}

Catalog expandVertexColors(const Catalog& in, int vertexColors, const CanonicalOptions& copts) {
  requireExpandable(in);
  if (vertexColors < 1) fail(Errc::InvalidArgument, "vertexColors must be >= 1");
  const bool directed = in.desc.directed;
  const int n = in.desc.order;
  std::vector<Key> keys;
  for (const Key& key : in.keys) {
    const ColoredGraph g = deserialize(key, directed);
    std::vector<int> digits(n, 0);
    do {
      ColoredGraph h = g;
      for (int v = 0; v < n; ++v) h.setVertexColor(v, digits[v]);
      keys.push_back(canonicalGraph(h, copts));
    } while (nextAssignment(digits, vertexColors));
  }
  CatalogDescriptor desc = in.desc;
  desc.vertexColors = vertexColors;
  return Catalog::fromKeys(desc, std::move(keys));
}

}  // namespace hgo

#ifndef HGO_CATALOG_HPP
#define HGO_CATALOG_HPP

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "hgo/graph.hpp"

namespace hgo {

enum class CatalogKind { Graphs, Orbits };

struct CatalogDescriptor {
  CatalogKind kind = CatalogKind::Graphs;
  bool directed = false;
  int order = 0;
  int vertexColors = 1;  // palette size; vertex colors lie in [0, vertexColors)
  int edgeColors = 1;    // palette size; edge colors lie in {0} u [1, edgeColors]
  bool connectedOnly = false;

  bool operator==(const CatalogDescriptor&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& key) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (int v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Sorted, deduplicated sequence of canonical keys of one type, with key ->
// index lookup. Indices define the coordinate system of count vectors.
struct Catalog {
  CatalogDescriptor desc;
  std::vector<Key> keys;  // strictly ascending
  std::unordered_map<Key, int, KeyHash> index;

  std::size_t size() const { return keys.size(); }

  // -1 when absent.
  int indexOf(const Key& key) const {
    auto it = index.find(key);
    return it == index.end() ? -1 : it->second;
  }

  // Keys need not be sorted or unique on input.
  static Catalog fromKeys(const CatalogDescriptor& desc, std::vector<Key> keys);
};

}  // namespace hgo

#endif  // HGO_CATALOG_HPP

#include "hgo/catalog.hpp"

#include <algorithm>

namespace hgo {

Catalog Catalog::fromKeys(const CatalogDescriptor& desc, std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  Catalog c;
  c.desc = desc;
  c.keys = std::move(keys);
  c.index.reserve(c.keys.size() * 2);
  for (std::size_t i = 0; i < c.keys.size(); ++i) c.index.emplace(c.keys[i], static_cast<int>(i));
  return c;
}

}  // namespace hgo

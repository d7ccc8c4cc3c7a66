#ifndef HGO_CATALOG_STORE_HPP
#define HGO_CATALOG_STORE_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hgo/catalog.hpp"

namespace hgo {

// "{u|d}_{g|o}_n{n}_v{vc}_e{ec}_{all|conn}.cat"
std::string catalogFileName(const CatalogDescriptor& desc);

// Text format, one catalog per file:
//   # hgo-catalog v1 directed=<0|1> kind=<g|o> n=<n> vc=<vc> ec=<ec> conn=<0|1> count=<N>
// followed by N newline-terminated comma-separated keys in ascending order.
void writeCatalog(const Catalog& catalog, std::ostream& out);

// Atomic write (temp file + rename) under the deterministic file name.
// Re-storing an identical catalog leaves the file untouched. Creates the
// directory if needed.
std::filesystem::path storeCatalog(const Catalog& catalog, const std::filesystem::path& cacheDir);

// Parsed catalog iff a file with this exact descriptor exists and is intact;
// nullopt when the file is missing. Corrupted files (version or descriptor
// mismatch, bad count, malformed or unsorted keys) raise CorruptCatalog.
std::optional<Catalog> loadCatalog(const CatalogDescriptor& desc,
                                   const std::filesystem::path& cacheDir);

// Explicit choice, else HGO_CACHE_DIR, else a per-user default
// (XDG_CACHE_HOME or ~/.cache, subdirectory "hgo").
std::filesystem::path resolveCacheDir(const std::optional<std::filesystem::path>& explicitDir);

}  // namespace hgo

#endif  // HGO_CATALOG_STORE_HPP

#include "hgo/catalog_store.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace hgo {

namespace fs = std::filesystem;

std::string catalogFileName(const CatalogDescriptor& d) {
  std::string s;
  s += d.directed ? 'd' : 'u';
  s += '_';
  s += d.kind == CatalogKind::Graphs ? 'g' : 'o';
  s += "_n" + std::to_string(d.order);
  s += "_v" + std::to_string(d.vertexColors);
  s += "_e" + std::to_string(d.edgeColors);
  s += d.connectedOnly ? "_conn" : "_all";
  s += ".cat";
  return s;
}

void writeCatalog(const Catalog& catalog, std::ostream& out) {
  const CatalogDescriptor& d = catalog.desc;
  out << "# hgo-catalog v1 directed=" << (d.directed ? 1 : 0) << " kind="
      << (d.kind == CatalogKind::Graphs ? 'g' : 'o') << " n=" << d.order
      << " vc=" << d.vertexColors << " ec=" << d.edgeColors << " conn=" << (d.connectedOnly ? 1 : 0)
      << " count=" << catalog.keys.size() << "\n";
  for (const Key& key : catalog.keys) out << keyToString(key) << "\n";
}

std::filesystem::path storeCatalog(const Catalog& catalog, const std::filesystem::path& cacheDir) {
  std::error_code ec;
  fs::create_directories(cacheDir, ec);
  if (!fs::is_directory(cacheDir))
    fail(Errc::CacheDirMissing, "cannot use cache directory " + cacheDir.string());

  const fs::path target = cacheDir / catalogFileName(catalog.desc);
  std::ostringstream buffer;
  writeCatalog(catalog, buffer);
  const std::string content = buffer.str();

  if (fs::exists(target)) {
    std::ifstream existing(target, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(existing)), std::istreambuf_iterator<char>());
    if (existing && bytes == content) return target;  // identical: leave untouched
  }

  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      fail(Errc::IoError, "cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(Errc::IoError, "cannot move catalog into place at " + target.string());
  }
  return target;
}

namespace {

[[noreturn]] void corrupt(const fs::path& p, const std::string& why) {
  fail(Errc::CorruptCatalog, p.string() + ": " + why);
}

}  // namespace

std::optional<Catalog> loadCatalog(const CatalogDescriptor& desc,
                                   const std::filesystem::path& cacheDir) {
  const fs::path path = cacheDir / catalogFileName(desc);
  if (!fs::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path.string());

  std::string header;
  if (!std::getline(in, header)) corrupt(path, "missing header");
  std::istringstream hs(header);
  std::string hash, magic, version;
  std::string fDirected, fKind, fN, fVc, fEc, fConn, fCount;
  hs >> hash >> magic >> version >> fDirected >> fKind >> fN >> fVc >> fEc >> fConn >> fCount;
  if (!hs || hash != "#" || magic != "hgo-catalog") corrupt(path, "bad header");
  if (version != "v1") corrupt(path, "unsupported format version \"" + version + "\"");

  auto field = [&](const std::string& token, const std::string& name) {
    if (token.rfind(name + "=", 0) != 0) corrupt(path, "bad header field \"" + token + "\"");
    return token.substr(name.size() + 1);
  };
  std::size_t count = 0;
  try {
    if (field(fDirected, "directed") != (desc.directed ? "1" : "0") ||
        field(fKind, "kind") != (desc.kind == CatalogKind::Graphs ? "g" : "o") ||
        std::stoi(field(fN, "n")) != desc.order ||
        std::stoi(field(fVc, "vc")) != desc.vertexColors ||
        std::stoi(field(fEc, "ec")) != desc.edgeColors ||
        field(fConn, "conn") != (desc.connectedOnly ? "1" : "0"))
      corrupt(path, "descriptor mismatch");
    count = static_cast<std::size_t>(std::stoull(field(fCount, "count")));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    corrupt(path, "bad header field value");
  }

  const std::size_t keyLength = desc.directed
                                    ? static_cast<std::size_t>(desc.order) * desc.order
                                    : static_cast<std::size_t>(desc.order) * (desc.order + 1) / 2;
  std::vector<Key> keys;
  keys.reserve(count);
  std::string line;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) corrupt(path, "count mismatch: body truncated");
    Key key;
    try {
      key = keyFromString(line);
    } catch (const Error&) {
      corrupt(path, "malformed key on line " + std::to_string(i + 2));
    }
    if (key.size() != keyLength) corrupt(path, "wrong key length on line " + std::to_string(i + 2));
    for (int v : key)
      if (v < 0) corrupt(path, "negative entry on line " + std::to_string(i + 2));
    if (!keys.empty() && !(keys.back() < key))
      corrupt(path, "body not strictly ascending at line " + std::to_string(i + 2));
    keys.push_back(std::move(key));
  }
  if (std::getline(in, line) && !line.empty()) corrupt(path, "count mismatch: trailing content");

  return Catalog::fromKeys(desc, std::move(keys));
}

std::filesystem::path resolveCacheDir(const std::optional<std::filesystem::path>& explicitDir) {
  if (explicitDir) return *explicitDir;
  if (const char* env = std::getenv("HGO_CACHE_DIR"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return fs::path(xdg) / "hgo";
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "hgo";
  return fs::temp_directory_path() / "hgo-cache";
}

}  // namespace hgo

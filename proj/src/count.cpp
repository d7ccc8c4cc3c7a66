#include "hgo/count.hpp"

#include <exception>
#include <numeric>
#include <thread>

namespace hgo {

std::uint64_t CountVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

namespace {

void validateHostAgainstCatalog(const ColoredGraph& host, const CatalogDescriptor& desc) {
  if (host.directed() != desc.directed)
    fail(Errc::InvalidArgument, "host orientation does not match the catalog");
  if (desc.order < 1 || desc.order > host.order())
    fail(Errc::KExceedsOrder, "k = " + std::to_string(desc.order) + " but host order is " +
                                  std::to_string(host.order()));
  if (host.maxVertexColor() >= desc.vertexColors)
    fail(Errc::ColorOutOfBounds, "host vertex color " + std::to_string(host.maxVertexColor()) +
                                     " outside palette [0, " +
                                     std::to_string(desc.vertexColors) + ")");
  if (host.maxEdgeColor() > desc.edgeColors)
    fail(Errc::ColorOutOfBounds, "host edge color " + std::to_string(host.maxEdgeColor()) +
                                     " outside palette [1, " + std::to_string(desc.edgeColors) +
                                     "]");
}

// Lexicographic k-subsets of {0..poolSize-1}; fn sees the index vector.
template <typename Fn>
void forEachCombination(int poolSize, int k, Fn&& fn) {
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  if (k > poolSize) return;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == poolSize - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

CountVector countOrbits(const ColoredGraph& host, int ref, const Catalog& catalog, int jobs) {
  if (catalog.desc.kind != CatalogKind::Orbits)
    fail(Errc::InvalidArgument, "countOrbits needs an orbit catalog");
  if (ref < 0 || ref >= host.order()) fail(Errc::VertexOutOfRange, "ref " + std::to_string(ref));
  validateHostAgainstCatalog(host, catalog.desc);

  const int k = catalog.desc.order;
  const bool connectedOnly = catalog.desc.connectedOnly;
  std::vector<int> pool;
  pool.reserve(host.order() - 1);
  for (int v = 0; v < host.order(); ++v)
    if (v != ref) pool.push_back(v);

  jobs = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> partial(jobs,
                                                  std::vector<std::uint64_t>(catalog.size(), 0));
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](int id) {
    try {
      std::uint64_t rank = 0;
      std::vector<int> verts(k);
      forEachCombination(static_cast<int>(pool.size()), k - 1, [&](const std::vector<int>& idx) {
        if (rank++ % static_cast<std::uint64_t>(jobs) != static_cast<std::uint64_t>(id)) return;
        verts[0] = ref;
        for (int i = 0; i < k - 1; ++i) verts[i + 1] = pool[idx[i]];
        ColoredGraph sub = inducedSubgraph(host, verts);
        if (connectedOnly && !isConnected(sub)) return;
        Key key = canonicalOrbit(sub, 0);
        int at = catalog.indexOf(key);
        if (at < 0)
          throw std::logic_error("orbit key of an induced subgraph is missing from the catalog");
        ++partial[id][at];
      });
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CountVector out{catalog.desc, std::vector<std::uint64_t>(catalog.size(), 0)};
  for (const auto& p : partial)
    for (std::size_t i = 0; i < p.size(); ++i) out.counts[i] += p[i];
  return out;
}

CountVector countGraphlets(const ColoredGraph& host, const Catalog& catalog, int jobs) {
  if (catalog.desc.kind != CatalogKind::Graphs)
    fail(Errc::InvalidArgument, "countGraphlets needs a graph catalog");
  validateHostAgainstCatalog(host, catalog.desc);

  const int k = catalog.desc.order;
  const bool connectedOnly = catalog.desc.connectedOnly;

  jobs = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> partial(jobs,
                                                  std::vector<std::uint64_t>(catalog.size(), 0));
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](int id) {
    try {
      std::uint64_t rank = 0;
      forEachCombination(host.order(), k, [&](const std::vector<int>& verts) {
        if (rank++ % static_cast<std::uint64_t>(jobs) != static_cast<std::uint64_t>(id)) return;
        ColoredGraph sub = inducedSubgraph(host, verts);
        if (connectedOnly && !isConnected(sub)) return;
        Key key = canonicalGraph(sub);
        int at = catalog.indexOf(key);
        if (at < 0)
          throw std::logic_error("graph key of an induced subgraph is missing from the catalog");
        ++partial[id][at];
      });
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  CountVector out{catalog.desc, std::vector<std::uint64_t>(catalog.size(), 0)};
  for (const auto& p : partial)
    for (std::size_t i = 0; i < p.size(); ++i) out.counts[i] += p[i];
  return out;
}

CountVector countOrbits(const ColoredGraph& host, int ref, int k, int vertexColors, int edgeColors,
                        bool connectedOnly, const CountOptions& opts) {
  if (ref < 0 || ref >= host.order()) fail(Errc::VertexOutOfRange, "ref " + std::to_string(ref));
  if (k < 1 || k > host.order())
    fail(Errc::KExceedsOrder,
         "k = " + std::to_string(k) + " but host order is " + std::to_string(host.order()));
  Catalog catalog =
      generateOrbits(k, vertexColors, edgeColors, host.directed(), connectedOnly, opts.generate);
  return countOrbits(host, ref, catalog, opts.jobs);
}

CountVector countGraphlets(const ColoredGraph& host, int k, int vertexColors, int edgeColors,
                           bool connectedOnly, const CountOptions& opts) {
  if (k < 1 || k > host.order())
    fail(Errc::KExceedsOrder,
         "k = " + std::to_string(k) + " but host order is " + std::to_string(host.order()));
  Catalog catalog =
      generateGraphs(k, vertexColors, edgeColors, host.directed(), connectedOnly, opts.generate);
  return countGraphlets(host, catalog, opts.jobs);
}

}  // namespace hgo

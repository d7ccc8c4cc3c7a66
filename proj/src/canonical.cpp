#include "hgo/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace hgo {

namespace {

std::atomic<std::uint64_t> g_searchCount{0};

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

void guardOrder(const ColoredGraph& g, const CanonicalOptions& opts) {
  if (g.order() > opts.maxOrder)
    fail(Errc::OrderTooLarge, "order " + std::to_string(g.order()) +
                                  " exceeds the canonical-search guard of " +
                                  std::to_string(opts.maxOrder) +
                                  " (raise CanonicalOptions::maxOrder to override)");
}

std::vector<int> slotDegrees(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<int> deg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      if (g.edgeColor(v, w) != 0) ++deg[v];
      if (g.edgeColor(w, v) != 0) ++deg[v];
    }
  return deg;
}

std::vector<std::vector<int>> supportDistances(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
  for (int s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v = 0; v < n; ++v) {
        if (v == u || dist[s][v] != kUnreachable) continue;
        if (g.edgeColor(u, v) != 0 || g.edgeColor(v, u) != 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

// Minimizes the serialization of g over the admissible vertex orderings:
// each successive position takes a vertex minimizing (degree, distance to
// position 0, distance to position 1, ...), every tie explored. With pruning
// enabled, branches whose determined entries already exceed the incumbent
// (undetermined entries read as 0, their smallest possible value) are cut,
// and tied candidates are visited in equitable-refinement cell order so a
// strong incumbent is found early. Both modes return the same key.
class CanonicalSearch {
 public:
  CanonicalSearch(const ColoredGraph& g, std::optional<int> anchor, bool prune)
      : g_(g),
        n_(g.order()),
        directed_(g.directed()),
        prune_(prune),
        anchor_(anchor),
        deg_(slotDegrees(g)),
        dist_(supportDistances(g)),
        rank_(n_, 0),
        p_(n_, -1),
        used_(n_, 0),
        cur_(keyLength(), 0) {
    if (prune_) {
      OrderedPartition base;
      if (anchor_) {
        std::vector<int> rest;
        for (int v = 0; v < n_; ++v)
          if (v != *anchor_) rest.push_back(v);
        base.push_back({*anchor_});
        if (!rest.empty()) base.push_back(std::move(rest));
      } else {
        std::vector<int> all(n_);
        std::iota(all.begin(), all.end(), 0);
        base.push_back(std::move(all));
      }
      OrderedPartition refined = refinePartition(g_, base);
      for (std::size_t c = 0; c < refined.size(); ++c)
        for (int v : refined[c]) rank_[v] = static_cast<int>(c);
    }
  }

  Key run() {
    descend(0);
    return best_;
  }

 private:
  std::size_t keyLength() const {
    return directed_ ? static_cast<std::size_t>(n_) * n_
                     : static_cast<std::size_t>(n_) * (n_ + 1) / 2;
  }

  // -1 / 0 / +1: order of a and b as candidates for the next position.
  int compareCandidates(int a, int b, int placed) const {
    if (deg_[a] != deg_[b]) return deg_[a] < deg_[b] ? -1 : 1;
    for (int s = 0; s < placed; ++s) {
      int da = dist_[p_[s]][a], db = dist_[p_[s]][b];
      if (da != db) return da < db ? -1 : 1;
    }
    return 0;
  }

  std::vector<int> nextCandidates(int placed) const {
    if (placed == 0 && anchor_) return {*anchor_};
    std::vector<int> best;
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      if (best.empty()) {
        best.push_back(v);
        continue;
      }
      int c = compareCandidates(v, best.front(), placed);
      if (c < 0) {
        best.clear();
        best.push_back(v);
      } else if (c == 0) {
        best.push_back(v);
      }
    }
    if (prune_)
      std::sort(best.begin(), best.end(), [&](int a, int b) {
        return rank_[a] != rank_[b] ? rank_[a] < rank_[b] : a < b;
      });
    return best;
  }

  void writeEntries(int t, int v) {
    if (directed_) {
      for (int j = 0; j < t; ++j) {
        cur_[static_cast<std::size_t>(t) * n_ + j] = g_.edgeColor(v, p_[j]);
        cur_[static_cast<std::size_t>(j) * n_ + t] = g_.edgeColor(p_[j], v);
      }
      cur_[static_cast<std::size_t>(t) * n_ + t] = g_.vertexColor(v);
    } else {
      std::size_t base = static_cast<std::size_t>(t) * (t + 1) / 2;
      for (int j = 0; j < t; ++j) cur_[base + j] = g_.edgeColor(v, p_[j]);
      cur_[base + t] = g_.vertexColor(v);
    }
  }

  // After `placed` positions: can this branch still reach a key <= best_?
  // Entries not yet determined are taken at their minimum (0).
  bool hopeless(int placed) const {
    if (!haveBest_) return false;
    if (!directed_) {
      std::size_t known = static_cast<std::size_t>(placed) * (placed + 1) / 2;
      for (std::size_t i = 0; i < known; ++i) {
        if (cur_[i] != best_[i]) return cur_[i] > best_[i];
      }
      return false;
    }
    for (std::size_t idx = 0; idx < cur_.size(); ++idx) {
      int i = static_cast<int>(idx) / n_, j = static_cast<int>(idx) % n_;
      int value = (i < placed && j < placed) ? cur_[idx] : 0;
      if (value != best_[idx]) return value > best_[idx];
    }
    return false;
  }

  void descend(int placed) {
    if (placed == n_) {
      if (!haveBest_ || cur_ < best_) {
        best_ = cur_;
        haveBest_ = true;
      }
      return;
    }
    for (int v : nextCandidates(placed)) {
      p_[placed] = v;
      used_[v] = 1;
      writeEntries(placed, v);
      if (!(prune_ && hopeless(placed + 1))) descend(placed + 1);
      used_[v] = 0;
    }
  }

  const ColoredGraph& g_;
  int n_;
  bool directed_;
  bool prune_;
  std::optional<int> anchor_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> rank_;
  std::vector<int> p_;
  std::vector<char> used_;
  Key cur_, best_;
  bool haveBest_ = false;
};

}  // namespace

Key canonicalGraph(const ColoredGraph& g, const CanonicalOptions& opts) {
  guardOrder(g, opts);
  g_searchCount.fetch_add(1, std::memory_order_relaxed);
  return CanonicalSearch(g, std::nullopt, opts.prune).run();
}

Key canonicalOrbit(const ColoredGraph& g, int ref, const CanonicalOptions& opts) {
  guardOrder(g, opts);
  if (ref < 0 || ref >= g.order())
    fail(Errc::VertexOutOfRange, "ref " + std::to_string(ref));
  g_searchCount.fetch_add(1, std::memory_order_relaxed);
  return CanonicalSearch(g, ref, opts.prune).run();
}

std::vector<OrbitClass> vertexOrbitPartition(const ColoredGraph& g, const CanonicalOptions& opts) {
  std::map<Key, std::vector<int>> classes;
  for (int v = 0; v < g.order(); ++v) classes[canonicalOrbit(g, v, opts)].push_back(v);
  std::vector<OrbitClass> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back({key, std::move(members)});
  return out;
}

std::vector<Permutation> automorphisms(const ColoredGraph& g, const CanonicalOptions& opts) {
  guardOrder(g, opts);
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = g.vertexColor(p[v]) == g.vertexColor(v);
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v) {
        if (u == v) continue;
        ok = g.edgeColor(p[u], p[v]) == g.edgeColor(u, v);
      }
    if (ok) out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Color-weighted degree of v into cell, diagonal included when v is a member.
std::vector<int> cellSignature(const ColoredGraph& g, int v, const OrderedPartition& pi) {
  std::vector<int> sig;
  sig.reserve(pi.size() * (g.directed() ? 2 : 1));
  for (const std::vector<int>& cell : pi) {
    int rowSum = 0;
    for (int w : cell) rowSum += (w == v) ? g.vertexColor(v) : g.edgeColor(v, w);
    sig.push_back(rowSum);
    if (g.directed()) {
      int colSum = 0;
      for (int w : cell) colSum += (w == v) ? g.vertexColor(v) : g.edgeColor(w, v);
      sig.push_back(colSum);
    }
  }
  return sig;
}

}  // namespace

OrderedPartition refinePartition(const ColoredGraph& g, const OrderedPartition& pi) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const std::vector<int>& cell : pi) {
    if (cell.empty()) fail(Errc::InvalidArgument, "empty cell");
    for (int v : cell) {
      if (v < 0 || v >= n) fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
      if (seen[v]) fail(Errc::DuplicateVertex, "vertex " + std::to_string(v));
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) fail(Errc::InvalidArgument, "cells do not cover all vertices");

  OrderedPartition cur;
  cur.reserve(pi.size());
  for (const std::vector<int>& cell : pi) {
    std::vector<int> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    cur.push_back(std::move(sorted));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cur.size() && !changed; ++c) {
      if (cur[c].size() < 2) continue;
      std::map<std::vector<int>, std::vector<int>> groups;  // signature -> members
      for (int v : cur[c]) groups[cellSignature(g, v, cur)].push_back(v);
      if (groups.size() < 2) continue;
      OrderedPartition next;
      next.reserve(cur.size() + groups.size() - 1);
      for (std::size_t i = 0; i < c; ++i) next.push_back(cur[i]);
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
      for (std::size_t i = c + 1; i < cur.size(); ++i) next.push_back(cur[i]);
      cur = std::move(next);
      changed = true;
    }
  }
  return cur;
}

std::uint64_t canonicalSearchCount() { return g_searchCount.load(std::memory_order_relaxed); }

void resetCanonicalSearchCount() { g_searchCount.store(0, std::memory_order_relaxed); }

}  // namespace hgo

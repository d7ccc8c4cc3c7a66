#ifndef HGO_CANONICAL_HPP
#define HGO_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "hgo/graph.hpp"

namespace hgo {

struct CanonicalOptions {
  // Canonical search is factorial in the worst case; larger inputs are rejected.
  int maxOrder = 10;
  // Branch-and-bound with equitable-refinement candidate ordering. Off means
  // plain exhaustive enumeration of the candidate orderings; the returned key
  // is identical either way.
  bool prune = true;
};

// Ordered partition of {0..n-1}: disjoint non-empty cells covering all
// vertices, cell order significant, members sorted.
using OrderedPartition = std::vector<std::vector<int>>;

struct OrbitClass {
  Key key;
  std::vector<int> members;
};

// Canonical key of the isomorphism class of g.
//
// The key is the lexicographically smallest serialization of g over a
// restricted, isomorphism-equivariant family of vertex orderings: position 0
// takes a vertex of minimum degree (count of incident nonzero edge slots),
// and each later position takes a vertex minimizing the tuple
// (degree, distance to position 0, distance to position 1, ...), with every
// tie explored. Distances are path lengths in the underlying undirected
// support graph.
Key canonicalGraph(const ColoredGraph& g, const CanonicalOptions& opts = {});

// Canonical key of the orbit of `ref`: same search with position 0 pinned to
// ref. Two vertices get equal keys iff some automorphism maps one to the
// other.
Key canonicalOrbit(const ColoredGraph& g, int ref, const CanonicalOptions& opts = {});

// Partition of V by equal canonicalOrbit keys, classes sorted by key.
std::vector<OrbitClass> vertexOrbitPartition(const ColoredGraph& g,
                                             const CanonicalOptions& opts = {});

// All permutations p with permuteGraph(g, p) == g, by exhaustive enumeration.
std::vector<Permutation> automorphisms(const ColoredGraph& g, const CanonicalOptions& opts = {});

// Coarsest equitable ordered partition refining pi: every vertex of a cell
// has the same color-weighted degree into every cell (row of the adjacency
// matrix with vertex colors on the diagonal, summed over the cell's columns;
// digraphs use row and column sums). Splitting is stable: parent cell order
// is preserved and new cells are ordered by ascending signature.
OrderedPartition refinePartition(const ColoredGraph& g, const OrderedPartition& pi);

// Process-wide count of canonical-form searches; lets callers observe that a
// catalog cache hit did no canonicalization work.
std::uint64_t canonicalSearchCount();
void resetCanonicalSearchCount();

}  // namespace hgo

#endif  // HGO_CANONICAL_HPP

#ifndef HGO_GRAPH_HPP
#define HGO_GRAPH_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hgo/error.hpp"

namespace hgo {

// A serialized colored graph: flat sequence of non-negative color entries.
// Undirected graphs serialize as the row-major lower triangle including the
// diagonal (length n(n+1)/2); directed graphs as the full row-major matrix
// (length n^2). Diagonal entries hold vertex colors, off-diagonal entries
// edge colors with 0 meaning "no edge". Keys compare lexicographically.
using Key = std::vector<int>;

std::string keyToString(const Key& key);  // "0,1,0,..."
Key keyFromString(const std::string& text);

// Bijection on {0..n-1}. images()[v] is where vertex v goes.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  bool operator==(const Permutation& other) const { return images_ == other.images_; }

 private:
  std::vector<int> images_;
};

// (g o h)(v) = g(h(v))
Permutation compose(const Permutation& g, const Permutation& h);

// Vertex/edge-colored graph of fixed order n, vertices 0..n-1. Vertex colors
// are 0-based; edge colors are 1-based with 0 meaning "absent". No self-loops.
// Intended use is value-style: all operations below are pure and return new
// graphs, so instances can be shared freely across threads once built.
class ColoredGraph {
 public:
  ColoredGraph(int order, bool directed);

  struct EdgeEntry {
    int u, v, color;
  };

  // Validating constructor. Undirected input may mention each unordered pair
  // once or twice; conflicting mentions are rejected.
  static ColoredGraph build(int order, bool directed, const std::vector<int>& vertexColors,
                            const std::vector<EdgeEntry>& edges);

  int order() const { return static_cast<int>(vertexColor_.size()); }
  bool directed() const { return directed_; }

  int vertexColor(int v) const { return vertexColor_(v); }
  int edgeColor(int u, int v) const { return edgeColor_(u, v); }

  void setVertexColor(int v, int color);
  // Undirected graphs set both (u,v) and (v,u). color 0 removes the edge.
  void setEdgeColor(int u, int v, int color);

  const Eigen::VectorXi& vertexColors() const { return vertexColor_; }
  const Eigen::MatrixXi& edgeColors() const { return edgeColor_; }

  int maxVertexColor() const;
  int maxEdgeColor() const;

  // Reinterpret an undirected graph as a digraph with symmetric arcs.
  ColoredGraph asDirected() const;

  bool operator==(const ColoredGraph& other) const;

 private:
  void checkVertex(int v) const;

  friend ColoredGraph inducedSubgraph(const ColoredGraph&, const std::vector<int>&);
  friend ColoredGraph permuteGraph(const ColoredGraph&, const Permutation&);

  bool directed_;
  Eigen::VectorXi vertexColor_;
  Eigen::MatrixXi edgeColor_;  // zero diagonal
};

Key serialize(const ColoredGraph& g);
ColoredGraph deserialize(const Key& key, bool directed);

// Subgraph induced by `vertices`; position i of the result carries the color
// of vertices[i], so the given order is preserved.
ColoredGraph inducedSubgraph(const ColoredGraph& g, const std::vector<int>& vertices);

// Weak connectivity for digraphs. Order-1 graphs are connected.
bool isConnected(const ColoredGraph& g);

// vertexColor'(p(v)) = vertexColor(v), edgeColor'(p(u),p(v)) = edgeColor(u,v).
ColoredGraph permuteGraph(const ColoredGraph& g, const Permutation& p);

}  // namespace hgo

#endif  // HGO_GRAPH_HPP

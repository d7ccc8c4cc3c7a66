#include "hgo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace hgo {

std::string keyToString(const Key& key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  return out;
}

Key keyFromString(const std::string& text) {
  Key out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    if (tok.empty()) fail(Errc::ParseError, "empty entry in key \"" + text + "\"");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad key entry \"" + tok + "\"");
    }
    if (used != tok.size()) fail(Errc::ParseError, "bad key entry \"" + tok + "\"");
    out.push_back(value);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) fail(Errc::BadPermutation, "images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || a >= n || b < 0 || b >= n)
    fail(Errc::VertexOutOfRange, "transposition endpoint out of range");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::swap(im[a], im[b]);
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int v = 0; v < size(); ++v) im[images_[v]] = v;
  return Permutation(std::move(im));
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) fail(Errc::BadPermutation, "size mismatch in composition");
  std::vector<int> im(g.size());
  for (int v = 0; v < g.size(); ++v) im[v] = g(h(v));
  return Permutation(std::move(im));
}

ColoredGraph::ColoredGraph(int order, bool directed) : directed_(directed) {
  if (order < 1) fail(Errc::InvalidArgument, "order must be positive");
  vertexColor_ = Eigen::VectorXi::Zero(order);
  edgeColor_ = Eigen::MatrixXi::Zero(order, order);
}

void ColoredGraph::checkVertex(int v) const {
  if (v < 0 || v >= order())
    fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " out of range [0, " +
                                     std::to_string(order()) + ")");
}

ColoredGraph ColoredGraph::build(int order, bool directed, const std::vector<int>& vertexColors,
                                 const std::vector<EdgeEntry>& edges) {
  ColoredGraph g(order, directed);
  if (static_cast<int>(vertexColors.size()) != order)
    fail(Errc::InvalidArgument, "expected " + std::to_string(order) + " vertex colors, got " +
                                    std::to_string(vertexColors.size()));
  for (int v = 0; v < order; ++v) {
    if (vertexColors[v] < 0) fail(Errc::NegativeColor, "vertex " + std::to_string(v));
    g.vertexColor_(v) = vertexColors[v];
  }
  Eigen::MatrixXi set = Eigen::MatrixXi::Zero(order, order);  // slot already mentioned
  for (const EdgeEntry& e : edges) {
    g.checkVertex(e.u);
    g.checkVertex(e.v);
    if (e.u == e.v) fail(Errc::SelfLoop, "vertex " + std::to_string(e.u));
    if (e.color < 0)
      fail(Errc::NegativeColor,
           "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (set(e.u, e.v)) {
      if (g.edgeColor_(e.u, e.v) != e.color) {
        Errc code = directed ? Errc::DuplicateEdge : Errc::AsymmetricUndirectedEdge;
        fail(code, "conflicting colors for edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
      }
      continue;
    }
    g.edgeColor_(e.u, e.v) = e.color;
    set(e.u, e.v) = 1;
    if (!directed) {
      g.edgeColor_(e.v, e.u) = e.color;
      set(e.v, e.u) = 1;
    }
  }
  return g;
}

void ColoredGraph::setVertexColor(int v, int color) {
  checkVertex(v);
  if (color < 0) fail(Errc::NegativeColor, "vertex " + std::to_string(v));
  vertexColor_(v) = color;
}

void ColoredGraph::setEdgeColor(int u, int v, int color) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) fail(Errc::SelfLoop, "vertex " + std::to_string(u));
  if (color < 0) fail(Errc::NegativeColor, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  edgeColor_(u, v) = color;
  if (!directed_) edgeColor_(v, u) = color;
}

int ColoredGraph::maxVertexColor() const { return vertexColor_.maxCoeff(); }

int ColoredGraph::maxEdgeColor() const { return edgeColor_.maxCoeff(); }

ColoredGraph ColoredGraph::asDirected() const {
  ColoredGraph g(order(), true);
  g.vertexColor_ = vertexColor_;
  g.edgeColor_ = edgeColor_;
  return g;
}

bool ColoredGraph::operator==(const ColoredGraph& other) const {
  return directed_ == other.directed_ && order() == other.order() &&
         vertexColor_ == other.vertexColor_ && edgeColor_ == other.edgeColor_;
}

Key serialize(const ColoredGraph& g) {
  const int n = g.order();
  Key out;
  if (g.directed()) {
    out.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.push_back(i == j ? g.vertexColor(i) : g.edgeColor(i, j));
  } else {
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) out.push_back(i == j ? g.vertexColor(i) : g.edgeColor(i, j));
  }
  return out;
}

namespace {

int orderFromKeyLength(std::size_t len, bool directed) {
  if (len == 0) fail(Errc::BadLength, "empty key");
  if (directed) {
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(len))));
    if (static_cast<std::size_t>(n) * n != len)
      fail(Errc::BadLength, "length " + std::to_string(len) + " is not a square");
    return n;
  }
  int n = static_cast<int>(std::lround((std::sqrt(8.0 * static_cast<double>(len) + 1.0) - 1.0) / 2.0));
  if (static_cast<std::size_t>(n) * (n + 1) / 2 != len)
    fail(Errc::BadLength, "length " + std::to_string(len) + " is not triangular");
  return n;
}

}  // namespace

ColoredGraph deserialize(const Key& key, bool directed) {
  const int n = orderFromKeyLength(key.size(), directed);
  ColoredGraph g(n, directed);
  std::size_t t = 0;
  auto entry = [&](int i, int j) {
    int value = key[t++];
    if (value < 0) fail(Errc::NegativeColor, "key entry " + std::to_string(t - 1));
    if (i == j)
      g.setVertexColor(i, value);
    else if (value != 0)
      g.setEdgeColor(i, j, value);
  };
  if (directed) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) entry(i, j);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) entry(i, j);
  }
  return g;
}

ColoredGraph inducedSubgraph(const ColoredGraph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) fail(Errc::InvalidArgument, "empty vertex sequence");
  std::vector<char> seen(g.order(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      fail(Errc::VertexOutOfRange, "vertex " + std::to_string(v));
    if (seen[v]) fail(Errc::DuplicateVertex, "vertex " + std::to_string(v));
    seen[v] = 1;
  }
  ColoredGraph sub(static_cast<int>(vertices.size()), g.directed());
  // Eigen 3.4 index slicing keeps the given vertex order.
  sub.vertexColor_ = g.vertexColor_(vertices);
  sub.edgeColor_ = g.edgeColor_(vertices, vertices);
  return sub;
}

bool isConnected(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int found = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && (g.edgeColor(u, v) != 0 || g.edgeColor(v, u) != 0)) {
        seen[v] = 1;
        ++found;
        queue.push_back(v);
      }
    }
  }
  return found == n;
}

ColoredGraph permuteGraph(const ColoredGraph& g, const Permutation& p) {
  if (p.size() != g.order()) fail(Errc::BadPermutation, "permutation size mismatch");
  const int n = g.order();
  Eigen::PermutationMatrix<Eigen::Dynamic> P(n);
  for (int v = 0; v < n; ++v) P.indices()(v) = p(v);
  ColoredGraph out(n, g.directed());
  out.vertexColor_ = P * g.vertexColor_;
  out.edgeColor_ = P * g.edgeColor_ * P.transpose();
  return out;
}

}  // namespace hgo

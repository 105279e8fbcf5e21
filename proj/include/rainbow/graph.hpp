#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/bigint.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ",color " +
         std::to_string(e.color) + ")";
}

struct Neighbor {
  Vertex vertex = 0;
  Color color = 0;
  // Dense index of `color` in ColoredGraph::colors().
  std::uint32_t color_index = 0;
};

// Unvalidated edge list, as read from a document.
struct GraphDocument {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

struct Violation {
  enum class Kind { VertexOutOfRange, Loop, DuplicateEdge, ImproperColoring };

  Kind kind;
  Edge edge;           // offending edge (the second one for duplicates/clashes)
  Vertex vertex = 0;   // clash vertex for ImproperColoring
  Color color = 0;

  std::string describe() const {
    switch (kind) {
      case Kind::VertexOutOfRange:
        return "vertex id out of range in edge " + to_string(edge);
      case Kind::Loop:
        return "loop at vertex " + std::to_string(edge.u);
      case Kind::DuplicateEdge:
        return "duplicate edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v);
      case Kind::ImproperColoring:
        return "improper coloring at vertex " + std::to_string(vertex) + ": color " +
               std::to_string(color) + " repeats";
    }
    return {};
  }
};

using ValidationReport = std::vector<Violation>;

namespace detail {

inline Edge normalized(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

// Walks the edges in document order and reports each violation once.
// `first_only` stops at the first offending edge.
inline ValidationReport scan_document(std::size_t n, const std::vector<Edge>& edges,
                                      bool first_only) {
  ValidationReport report;
  std::set<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::map<Color, int>> seen(n);
  std::set<std::pair<Vertex, Color>> reported_clash;
  for (const Edge& raw : edges) {
    const Edge e = normalized(raw);
    if (e.v >= n) {
      report.push_back({Violation::Kind::VertexOutOfRange, e});
    } else if (e.u == e.v) {
      report.push_back({Violation::Kind::Loop, e, e.u});
    } else if (!pairs.insert({e.u, e.v}).second) {
      report.push_back({Violation::Kind::DuplicateEdge, e});
    } else {
      for (Vertex x : {e.u, e.v}) {
        if (++seen[x][e.color] == 2 && reported_clash.insert({x, e.color}).second) {
          report.push_back({Violation::Kind::ImproperColoring, e, x, e.color});
        }
      }
    }
    if (first_only && !report.empty()) break;
  }
  return report;
}

}  // namespace detail

// Lists every loop, duplicate edge, out-of-range id and (vertex, color)
// clash. Empty iff the document describes a valid ColoredGraph.
inline ValidationReport validate(const GraphDocument& doc) {
  return detail::scan_document(doc.n, doc.edges, false);
}

/// Simple undirected graph with a proper edge coloring on vertices 0..n-1.
///
/// Immutable once constructed. Edges are stored with u < v, sorted; each
/// adjacency list is sorted by neighbor id.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  explicit ColoredGraph(std::size_t n) : n_(n), adjacency_(n) {}

  /// Throws InvariantError naming the first offending edge.
  ColoredGraph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
    auto report = detail::scan_document(n, edges, true);
    if (!report.empty()) throw InvariantError(report.front().describe());
    for (Edge& e : edges) e = detail::normalized(e);
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    edges_ = std::move(edges);
    for (const Edge& e : edges_) colors_.push_back(e.color);
    std::sort(colors_.begin(), colors_.end());
    colors_.erase(std::unique(colors_.begin(), colors_.end()), colors_.end());
    for (const Edge& e : edges_) {
      auto ci = static_cast<std::uint32_t>(
          std::lower_bound(colors_.begin(), colors_.end(), e.color) - colors_.begin());
      adjacency_[e.u].push_back({e.v, e.color, ci});
      adjacency_[e.v].push_back({e.u, e.color, ci});
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    }
  }

  static ColoredGraph from_document(const GraphDocument& doc) {
    return ColoredGraph(doc.n, doc.edges);
  }

  GraphDocument document() const { return {n_, edges_}; }

  std::size_t n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  /// Distinct colors in ascending order; Neighbor::color_index points here.
  const std::vector<Color>& colors() const { return colors_; }

  std::optional<Color> edge_color(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& a, Vertex x) { return a.vertex < x; });
    if (it == list.end() || it->vertex != v) return std::nullopt;
    return it->color;
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_color(u, v).has_value(); }

  std::size_t min_degree() const {
    std::size_t d = n_ == 0 ? 0 : adjacency_[0].size();
    for (const auto& list : adjacency_) d = std::min(d, list.size());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& list : adjacency_) d = std::max(d, list.size());
    return d;
  }

  /// 2e(G)/n; zero for the empty vertex set.
  Rational average_degree() const {
    if (n_ == 0) return 0;
    return Rational(2 * static_cast<std::int64_t>(edges_.size()), static_cast<std::int64_t>(n_));
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Color> colors_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Valid graphs trivially validate clean; kept for symmetry with documents.
inline ValidationReport validate(const ColoredGraph& g) { return validate(g.document()); }

// Subgraph relabelled to 0..|S|-1 in ascending order of original ids.
struct InducedSubgraph {
  ColoredGraph graph;
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const ColoredGraph& g, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::int64_t> relabel(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (relabel[e.u] >= 0 && relabel[e.v] >= 0) {
      edges.push_back({static_cast<Vertex>(relabel[e.u]), static_cast<Vertex>(relabel[e.v]), e.color});
    }
  }
  return {ColoredGraph(keep.size(), std::move(edges)), std::move(keep)};
}

enum class Side : std::uint8_t { Left, Right };

/// Vertex -> side assignment. LEFT plays the role of X / A.
struct BipartitionTag {
  std::vector<Side> side;

  /// Throws BipartitionError unless every edge joins LEFT to RIGHT.
  void check(const ColoredGraph& g) const {
    if (side.size() != g.n()) {
      throw BipartitionError("bipartition has " + std::to_string(side.size()) +
                             " entries for a graph on " + std::to_string(g.n()) + " vertices");
    }
    for (const Edge& e : g.edges()) {
      if (side[e.u] == side[e.v]) throw BipartitionError("edge " + to_string(e) + " does not cross sides");
    }
  }

  std::size_t count(Side s) const { return static_cast<std::size_t>(std::count(side.begin(), side.end(), s)); }
};

// BFS 2-coloring; the smallest vertex of each component goes LEFT.
inline std::optional<BipartitionTag> find_bipartition(const ColoredGraph& g) {
  std::vector<int> color(g.n(), -1);
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (const Neighbor& nb : g.neighbors(x)) {
        if (color[nb.vertex] < 0) {
          color[nb.vertex] = 1 - color[x];
          queue.push(nb.vertex);
        } else if (color[nb.vertex] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  BipartitionTag tag;
  for (int c : color) tag.side.push_back(c == 0 ? Side::Left : Side::Right);
  return tag;
}

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  Rational average;
  // Averages over the LEFT (A) and RIGHT (B) sides, when sides were given.
  std::optional<Rational> left_average;
  std::optional<Rational> right_average;
  unsigned k = 0;
  BigInt power_sum;  // sum over v of d(v)^k
};

inline DegreeStats degree_profile(const ColoredGraph& g, unsigned k) {
  DegreeStats s;
  s.min_degree = g.min_degree();
  s.max_degree = g.max_degree();
  s.average = g.average_degree();
  s.k = k;
  for (Vertex v = 0; v < g.n(); ++v) s.power_sum += pow(BigInt(g.degree(v)), k);
  return s;
}

inline DegreeStats degree_profile(const ColoredGraph& g, unsigned k, const BipartitionTag& sides) {
  sides.check(g);
  DegreeStats s = degree_profile(g, k);
  std::array<std::size_t, 2> total{}, count{};
  for (Vertex v = 0; v < g.n(); ++v) {
    auto idx = static_cast<std::size_t>(sides.side[v]);
    total[idx] += g.degree(v);
    ++count[idx];
  }
  auto avg = [](std::size_t t, std::size_t c) {
    return c == 0 ? Rational(0) : Rational(static_cast<std::int64_t>(t), static_cast<std::int64_t>(c));
  };
  s.left_average = avg(total[0], count[0]);
  s.right_average = avg(total[1], count[1]);
  return s;
}

using Triple = std::array<Vertex, 3>;

/// 3-uniform hypergraph in which two distinct triples share at most one vertex.
class LinearTripleSystem {
 public:
  LinearTripleSystem() = default;

  /// Throws InvariantError on a degenerate, out-of-range or non-linear triple.
  LinearTripleSystem(std::size_t n, std::vector<Triple> triples) : n_(n) {
    std::set<std::pair<Vertex, Vertex>> pairs;
    for (Triple t : triples) {
      std::sort(t.begin(), t.end());
      std::string name = "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                         std::to_string(t[2]) + "}";
      if (t[2] >= n) throw InvariantError("vertex id out of range in triple " + name);
      if (t[0] == t[1] || t[1] == t[2]) throw InvariantError("triple " + name + " has a repeated vertex");
      for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
        if (!pairs.insert({a, b}).second) {
          throw InvariantError("triple " + name + " shares two vertices with an earlier triple");
        }
      }
      triples_.push_back(t);
    }
    std::sort(triples_.begin(), triples_.end());
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }

  bool contains(Triple t) const {
    std::sort(t.begin(), t.end());
    return std::binary_search(triples_.begin(), triples_.end(), t);
  }

  friend bool operator==(const LinearTripleSystem&, const LinearTripleSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Triple> triples_;
};

}  // namespace rainbow

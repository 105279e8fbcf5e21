#pragma once

#include <vector>

#include "rainbow/rainbow.hpp"

namespace rainbow::testing {

inline ColoredGraph single_edge(Color c = 0) { return ColoredGraph(2, {{0, 1, c}}); }

inline ColoredGraph path3() { return ColoredGraph(3, {{0, 1, 0}, {1, 2, 1}}); }

// K_4 whose three color classes are its perfect matchings.
inline ColoredGraph k4() {
  return ColoredGraph(4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {1, 2, 2}});
}

inline ColoredGraph k3() { return ColoredGraph(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}); }

inline ColoredGraph c4_rainbow() { return ColoredGraph(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {0, 3, 3}}); }

inline ColoredGraph star(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i, i});
  return ColoredGraph(leaves + 1, std::move(edges));
}

// K_{a,b}: LEFT = 0..a-1, RIGHT = a..a+b-1, color (i + j) mod b for a <= b.
inline ColoredGraph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, a + j, (i + j) % b});
  }
  return ColoredGraph(a + b, std::move(edges));
}

inline BipartitionTag natural_sides(Vertex a, Vertex b) {
  BipartitionTag tag;
  tag.side.assign(a, Side::Left);
  tag.side.resize(a + b, Side::Right);
  return tag;
}

inline ColoredGraph k4_plus_pendant() {
  auto doc = k4().document();
  doc.n = 5;
  doc.edges.push_back({0, 4, 7});
  return ColoredGraph::from_document(doc);
}

inline ColoredGraph disjoint_k3_k5() {
  std::vector<Edge> edges{{0, 1, 0}, {1, 2, 1}, {0, 2, 2}};
  Color c = 10;
  for (Vertex u = 3; u < 8; ++u) {
    for (Vertex v = u + 1; v < 8; ++v) edges.push_back({u, v, c++});
  }
  return ColoredGraph(8, std::move(edges));
}

inline LinearTripleSystem loose_triangle() { return LinearTripleSystem(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}); }

inline LinearTripleSystem loose_square() {
  return LinearTripleSystem(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}});
}

}  // namespace rainbow::testing

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/bigint.hpp"
#include "rainbow/detail/max_flow.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Densest subgraph
// ---------------------------------------------------------------------------

enum class DensestMethod {
  Exact,   // parametric min-cut, Dinkelbach iteration on the density
  Greedy,  // min-degree peeling, a 2-approximation kept for comparison
};

namespace detail {

inline Rational density_of(const ColoredGraph& g, const std::vector<char>& in) {
  std::int64_t edges = 0, vertices = 0;
  for (Vertex v = 0; v < g.n(); ++v) vertices += in[v];
  for (const Edge& e : g.edges()) edges += (in[e.u] && in[e.v]);
  return vertices == 0 ? Rational(0) : Rational(edges, vertices);
}

// Largest S maximising q*e(S) - p*|S| (may be empty).
inline std::vector<char> best_set_at(const ColoredGraph& g, std::int64_t p, std::int64_t q) {
  const std::size_t n = g.n();
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const std::size_t source = n, sink = n + 1;
  MaxFlow flow(n + 2);
  for (Vertex v = 0; v < n; ++v) {
    flow.add_edge(source, v, q * m);
    flow.add_edge(v, sink, q * m + 2 * p - q * static_cast<std::int64_t>(g.degree(v)));
  }
  for (const Edge& e : g.edges()) {
    flow.add_edge(e.u, e.v, q);
    flow.add_edge(e.v, e.u, q);
  }
  flow.run(source, sink);
  auto to_sink = flow.reaches_sink(sink);
  std::vector<char> in(n, 0);
  for (Vertex v = 0; v < n; ++v) in[v] = !to_sink[v];
  return in;
}

inline std::vector<char> densest_exact(const ColoredGraph& g) {
  std::vector<char> best(g.n(), 1);
  Rational density = density_of(g, best);
  while (true) {
    auto p = static_cast<std::int64_t>(numerator(density));
    auto q = static_cast<std::int64_t>(denominator(density));
    auto candidate = best_set_at(g, p, q);
    Rational cand_density = density_of(g, candidate);
    if (cand_density > density) {
      best = std::move(candidate);
      density = cand_density;
      continue;
    }
    // At the optimum the largest maximiser is the union of all densest sets.
    if (cand_density == density) return candidate;
    return best;
  }
}

inline std::vector<char> densest_greedy(const ColoredGraph& g) {
  const std::size_t n = g.n();
  std::vector<char> in(n, 1), best = in;
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  Rational best_density = density_of(g, in);
  std::int64_t edges = static_cast<std::int64_t>(g.edge_count());
  for (std::size_t remaining = n; remaining > 1; --remaining) {
    Vertex victim = 0;
    std::optional<std::size_t> low;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v] && (!low || degree[v] < *low)) {
        low = degree[v];
        victim = v;
      }
    }
    in[victim] = 0;
    edges -= static_cast<std::int64_t>(degree[victim]);
    for (const Neighbor& nb : g.neighbors(victim)) {
      if (in[nb.vertex]) --degree[nb.vertex];
    }
    Rational density(edges, static_cast<std::int64_t>(remaining - 1));
    if (density > best_density) {
      best_density = density;
      best = in;
    }
  }
  return best;
}

inline std::vector<Vertex> members(const std::vector<char>& in) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Induced subgraph of maximum average degree. Among densest vertex sets the
/// largest one is returned (densest sets are closed under union, so it is
/// unique).
inline InducedSubgraph max_avg_degree_subgraph(const ColoredGraph& g,
                                               DensestMethod method = DensestMethod::Exact) {
  if (g.edge_count() == 0) throw EmptyGraph("densest subgraph of an edgeless graph");
  auto in = method == DensestMethod::Exact ? detail::densest_exact(g) : detail::densest_greedy(g);
  return induced_subgraph(g, detail::members(in));
}

// ---------------------------------------------------------------------------
// Peeling
// ---------------------------------------------------------------------------

namespace detail {

// Repeatedly drops the smallest active vertex whose degree among active
// vertices is below t.
inline std::vector<char> peel_mask(const ColoredGraph& g, std::vector<char> active, const Rational& t) {
  std::vector<std::size_t> degree(g.n(), 0);
  for (const Edge& e : g.edges()) {
    if (active[e.u] && active[e.v]) {
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!active[v] || Rational(static_cast<std::int64_t>(degree[v])) >= t) continue;
      active[v] = 0;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (active[nb.vertex]) --degree[nb.vertex];
      }
      changed = true;
      break;
    }
  }
  return active;
}

}  // namespace detail

/// Deletes vertices of degree < t until none remain. The result may be empty.
inline InducedSubgraph peel_to_min_degree(const ColoredGraph& g, const Rational& t) {
  auto active = detail::peel_mask(g, std::vector<char>(g.n(), 1), t);
  return induced_subgraph(g, detail::members(active));
}

// ---------------------------------------------------------------------------
// Vertex splitting
// ---------------------------------------------------------------------------

/// psi : V(source) -> V(target). Valid iff every source edge (u, v, c) maps to
/// a target edge (psi(u), psi(v)) of color c. Returns the first violation.
inline std::optional<std::string> check_color_preserving(const ColoredGraph& source,
                                                         const ColoredGraph& target,
                                                         const std::vector<Vertex>& psi) {
  if (psi.size() != source.n()) {
    return "map has " + std::to_string(psi.size()) + " entries for " + std::to_string(source.n()) +
           " source vertices";
  }
  for (const Edge& e : source.edges()) {
    auto c = target.edge_color(psi[e.u], psi[e.v]);
    if (!c) {
      return "edge " + to_string(e) + " maps to non-edge " + std::to_string(psi[e.u]) + "-" +
             std::to_string(psi[e.v]);
    }
    if (*c != e.color) {
      return "edge " + to_string(e) + " maps to an edge of color " + std::to_string(*c);
    }
  }
  return std::nullopt;
}

struct SplitResult {
  ColoredGraph graph;       // G'
  std::vector<Vertex> psi;  // G' -> G, color preserving
  std::size_t delta = 0;    // minimum degree of the input
};

/// Splits every vertex v into s = ceil(d(v)/delta) copies whose
/// neighborhoods partition N(v) into near-equal contiguous chunks of the
/// ascending neighbor list. Copy 0 keeps id v; further copies get fresh ids
/// n, n+1, ... in creation order. Vertices are processed in ascending id.
inline SplitResult split_regularize(const ColoredGraph& g) {
  const std::size_t delta = g.min_degree();
  if (g.n() == 0 || delta == 0) throw DegreeZero("split_regularize needs minimum degree >= 1");

  struct Arc {
    Vertex to;
    Color color;
  };
  std::vector<std::vector<Arc>> adj(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (const Neighbor& nb : g.neighbors(v)) adj[v].push_back({nb.vertex, nb.color});
  }
  std::vector<Vertex> psi(g.n());
  for (Vertex v = 0; v < g.n(); ++v) psi[v] = v;

  for (Vertex v = 0; v < g.n(); ++v) {
    auto list = adj[v];
    std::sort(list.begin(), list.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
    const std::size_t d = list.size();
    const std::size_t s = (d + delta - 1) / delta;
    if (s <= 1) continue;
    std::size_t at = 0;
    for (std::size_t part = 0; part < s; ++part) {
      const std::size_t size = d / s + (part < d % s ? 1 : 0);
      Vertex owner = v;
      if (part > 0) {
        owner = static_cast<Vertex>(adj.size());
        adj.emplace_back();
        psi.push_back(v);
      }
      std::vector<Arc> chunk(list.begin() + static_cast<std::ptrdiff_t>(at),
                             list.begin() + static_cast<std::ptrdiff_t>(at + size));
      at += size;
      if (owner != v) {
        for (const Arc& a : chunk) {
          for (Arc& back : adj[a.to]) {
            if (back.to == v) back.to = owner;
          }
        }
      }
      adj[owner] = std::move(chunk);
    }
  }

  std::vector<Edge> edges;
  for (Vertex x = 0; x < adj.size(); ++x) {
    for (const Arc& a : adj[x]) {
      if (x < a.to) edges.push_back({x, a.to, a.color});
    }
  }
  SplitResult result{ColoredGraph(adj.size(), std::move(edges)), std::move(psi), delta};

  const auto& out = result.graph;
  if (out.edge_count() != g.edge_count()) throw LemmaViolation("vertex splitting changed the edge count");
  if (out.n() < g.n() || out.n() * delta > 4 * g.edge_count()) {
    throw LemmaViolation("split graph has " + std::to_string(out.n()) + " vertices, outside [n, 4e/delta]");
  }
  for (Vertex x = 0; x < out.n(); ++x) {
    if (2 * out.degree(x) < delta || out.degree(x) > delta) {
      throw LemmaViolation("split vertex " + std::to_string(x) + " has degree " +
                           std::to_string(out.degree(x)) + " outside [delta/2, delta]");
    }
  }
  if (auto bad = check_color_preserving(out, g, result.psi)) throw LemmaViolation(*bad);
  return result;
}

// ---------------------------------------------------------------------------
// Lopsided dyadic regularization
// ---------------------------------------------------------------------------

enum class Quadrant { X0Y1, X1Y0, X1Y1 };

inline const char* to_string(Quadrant q) {
  switch (q) {
    case Quadrant::X0Y1: return "X0-Y1";
    case Quadrant::X1Y0: return "X1-Y0";
    case Quadrant::X1Y1: return "X1-Y1";
  }
  return "?";
}

/// Output of the lopsided regularization together with the intermediate
/// objects of the construction. All graphs share the input's vertex ids.
struct LopsidedResult {
  unsigned k = 0;
  std::size_t n = 0;
  Rational average_degree;  // d
  int i = 0;
  std::vector<Vertex> A;
  std::vector<Vertex> B;
  ColoredGraph subgraph;  // G'': the G1 edges between A and B

  // certificates
  std::array<std::size_t, 4> part_sizes{};  // |X0|, |X1|, |Y0|, |Y1|
  std::array<std::size_t, 3> quadrant_edges{};
  Quadrant quadrant = Quadrant::X1Y1;
  ColoredGraph peeled;  // G1
  std::vector<Vertex> x_star;
  std::vector<Vertex> y_star;
  std::map<int, std::size_t> class_sizes;  // |Z_i|
};

namespace detail {

// The i with 2^(i-6) d <= degree < 2^(i-5) d.
inline int dyadic_class(std::size_t degree, const Rational& d) {
  Rational r = Rational(static_cast<std::int64_t>(degree)) / d;
  int j = 0;
  while (r >= 2) {
    r /= 2;
    ++j;
  }
  while (r < 1) {
    r *= 2;
    --j;
  }
  return j + 6;
}

inline Rational pow2(int e) {
  Rational r = 1;
  for (int t = 0; t < std::abs(e); ++t) r *= 2;
  return e >= 0 ? r : Rational(1) / r;
}

// |A| >= (1/k) 2^(-ki/(k-1)) n, as (|A| k)^(k-1) 2^(ki) >= n^(k-1).
inline bool meets_class_threshold(std::size_t size, unsigned k, int i, std::size_t n) {
  Rational lhs = pow(Rational(static_cast<std::int64_t>(size * k)), k - 1) *
                 pow2(static_cast<int>(k) * i);
  Rational rhs = pow(Rational(static_cast<std::int64_t>(n)), k - 1);
  return lhs >= rhs;
}

inline ColoredGraph restrict_edges(const ColoredGraph& g, const std::vector<char>& a,
                                   const std::vector<char>& b) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((a[e.u] && b[e.v]) || (a[e.v] && b[e.u])) edges.push_back(e);
  }
  return ColoredGraph(g.n(), std::move(edges));
}

}  // namespace detail

/// Runs the lopsided regularization on a bipartite graph (X = LEFT,
/// Y = RIGHT) that has no proper subgraph of larger average degree.
///
/// Throws PreconditionError if the densest-subgraph hypothesis fails and
/// LemmaViolation if any guaranteed conclusion does not hold.
inline LopsidedResult lopsided_regularize(const ColoredGraph& g, const BipartitionTag& sides, unsigned k) {
  if (k < 2) throw PreconditionError("lopsided regularization needs k >= 2");
  if (g.edge_count() == 0) throw PreconditionError("lopsided regularization needs average degree > 0");
  {
    auto densest = max_avg_degree_subgraph(g);
    if (densest.graph.average_degree() > g.average_degree()) {
      throw PreconditionError("a proper subgraph on " + std::to_string(densest.graph.n()) +
                              " vertices has average degree " + to_string(densest.graph.average_degree()) +
                              " > " + to_string(g.average_degree()));
    }
  }
  sides.check(g);

  const std::size_t n = g.n();
  LopsidedResult r;
  r.k = k;
  r.n = n;
  r.average_degree = g.average_degree();
  const Rational& d = r.average_degree;

  std::vector<char> x0(n), x1(n), y0(n), y1(n);
  for (Vertex v = 0; v < n; ++v) {
    const bool high = Rational(static_cast<std::int64_t>(g.degree(v))) >= 4 * d;
    const bool left = sides.side[v] == Side::Left;
    x0[v] = left && high;
    x1[v] = left && !high;
    y0[v] = !left && high;
    y1[v] = !left && !high;
  }
  for (Vertex v = 0; v < n; ++v) {
    r.part_sizes[0] += x0[v];
    r.part_sizes[1] += x1[v];
    r.part_sizes[2] += y0[v];
    r.part_sizes[3] += y1[v];
  }

  // (high side, low side) per quadrant; listing order breaks ties.
  const std::array<std::pair<const std::vector<char>*, const std::vector<char>*>, 3> quadrants{
      std::pair{&x0, &y1}, std::pair{&y0, &x1}, std::pair{&x1, &y1}};
  std::size_t pick = 0;
  for (std::size_t q = 0; q < 3; ++q) {
    for (const Edge& e : g.edges()) {
      const auto& [hi, lo] = quadrants[q];
      if (((*hi)[e.u] && (*lo)[e.v]) || ((*hi)[e.v] && (*lo)[e.u])) ++r.quadrant_edges[q];
    }
    if (r.quadrant_edges[q] > r.quadrant_edges[pick]) pick = q;
  }
  r.quadrant = static_cast<Quadrant>(pick);
  const auto& high = *quadrants[pick].first;
  const auto& low = *quadrants[pick].second;

  ColoredGraph quadrant_graph = detail::restrict_edges(g, high, low);
  std::vector<char> active(n);
  for (Vertex v = 0; v < n; ++v) active[v] = high[v] || low[v];
  active = detail::peel_mask(quadrant_graph, active, d / 16);
  std::vector<char> xs(n), ys(n);
  for (Vertex v = 0; v < n; ++v) {
    xs[v] = active[v] && high[v];
    ys[v] = active[v] && low[v];
  }
  r.peeled = detail::restrict_edges(quadrant_graph, xs, ys);
  r.x_star = detail::members(xs);
  r.y_star = detail::members(ys);
  if (8 * r.peeled.edge_count() < g.edge_count()) {
    throw LemmaViolation("peeled quadrant keeps " + std::to_string(r.peeled.edge_count()) +
                         " edges, fewer than e(G)/8");
  }

  std::map<int, std::vector<Vertex>> classes;
  for (Vertex x : r.x_star) classes[detail::dyadic_class(r.peeled.degree(x), d)].push_back(x);
  for (const auto& [i, members] : classes) r.class_sizes[i] = members.size();
  auto chosen = std::find_if(classes.begin(), classes.end(), [&](const auto& entry) {
    return detail::meets_class_threshold(entry.second.size(), k, entry.first, n);
  });
  if (chosen == classes.end()) throw LemmaViolation("no dyadic degree class meets the size threshold");
  r.i = chosen->first;
  r.A = chosen->second;
  r.B = r.y_star;

  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (Vertex a : r.A) in_a[a] = 1;
  for (Vertex b : r.B) in_b[b] = 1;
  r.subgraph = detail::restrict_edges(r.peeled, in_a, in_b);

  if (!detail::meets_class_threshold(r.A.size(), k, r.i, n)) throw LemmaViolation("|A| below threshold");
  if (64 * r.B.size() < n) throw LemmaViolation("|B| below n/64");
  const Rational lo_deg = detail::pow2(r.i - 6) * d, hi_deg = detail::pow2(r.i - 5) * d;
  for (Vertex a : r.A) {
    Rational deg(static_cast<std::int64_t>(r.subgraph.degree(a)));
    if (deg < lo_deg || deg > hi_deg) {
      throw LemmaViolation("A-vertex " + std::to_string(a) + " has degree outside [2^(i-6)d, 2^(i-5)d]");
    }
  }
  for (Vertex b : r.B) {
    if (Rational(static_cast<std::int64_t>(r.subgraph.degree(b))) > 4 * d) {
      throw LemmaViolation("B-vertex " + std::to_string(b) + " has degree above 4d");
    }
  }
  return r;
}

}  // namespace rainbow

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rainbow/detail/rng.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr unsigned kMaxHypercubeDimension = 20;

/// Q_d with every edge colored by the coordinate it flips.
inline ColoredGraph hypercube(unsigned dimension) {
  if (dimension < 1 || dimension > kMaxHypercubeDimension) {
    throw SizeLimit("hypercube dimension must be in 1.." + std::to_string(kMaxHypercubeDimension));
  }
  const Vertex n = Vertex{1} << dimension;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (unsigned bit = 0; bit < dimension; ++bit) {
      const Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w, bit});
    }
  }
  return ColoredGraph(n, std::move(edges));
}

/// K_n colored by the circle-method round robin: in round r, vertex n-1
/// meets r and (r+j) meets (r-j) mod (n-1). Color r is a perfect matching.
inline ColoredGraph complete_one_factorization(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw OddOrder("one-factorization needs an even order >= 2, got " + std::to_string(n));
  const auto rounds = static_cast<Vertex>(n - 1);
  std::vector<Edge> edges;
  for (Vertex r = 0; r < rounds; ++r) {
    edges.push_back({r, rounds, r});
    for (Vertex j = 1; j < n / 2; ++j) {
      const Vertex a = (r + j) % rounds;
      const Vertex b = (r + rounds - j) % rounds;
      edges.push_back({std::min(a, b), std::max(a, b), r});
    }
  }
  return ColoredGraph(n, std::move(edges));
}

namespace detail {

// Smallest color absent at both endpoints, edges taken in the given order.
inline std::vector<Edge> greedy_edge_coloring(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::set<Color>> used(n);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    Color c = 0;
    while (used[u].count(c) || used[v].count(c)) ++c;
    used[u].insert(c);
    used[v].insert(c);
    edges.push_back({u, v, c});
  }
  return edges;
}

}  // namespace detail

/// Uniform random simple graph with m edges, greedily edge-colored in
/// canonical edge order.
inline ColoredGraph random_colored(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  if (m > all.size()) {
    throw TooManyEdges(std::to_string(m) + " edges requested, a simple graph on " + std::to_string(n) +
                       " vertices has at most " + std::to_string(all.size()));
  }
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first m slots are a uniform m-subset
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(all[i], all[i + detail::uniform_below(rng, all.size() - i)]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  return ColoredGraph(n, detail::greedy_edge_coloring(n, all));
}

struct BipartiteInstance {
  ColoredGraph graph;
  BipartitionTag sides;
};

/// Random bipartite graph with LEFT = 0..left-1 and RIGHT = left..left+right-1.
inline BipartiteInstance random_bipartite_colored(std::size_t left, std::size_t right, std::size_t m,
                                                  std::uint64_t seed) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = 0; v < right; ++v) all.emplace_back(u, static_cast<Vertex>(left + v));
  }
  if (m > all.size()) {
    throw TooManyEdges(std::to_string(m) + " edges requested, K_{" + std::to_string(left) + "," +
                       std::to_string(right) + "} has " + std::to_string(all.size()));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    std::swap(all[i], all[i + detail::uniform_below(rng, all.size() - i)]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  BipartiteInstance out{ColoredGraph(left + right, detail::greedy_edge_coloring(left + right, all)), {}};
  out.sides.side.assign(left + right, Side::Right);
  std::fill(out.sides.side.begin(), out.sides.side.begin() + static_cast<std::ptrdiff_t>(left), Side::Left);
  return out;
}

/// Seeded greedy linear triple system: draws random triples and keeps those
/// sharing at most one vertex with every kept triple. May return fewer than
/// m triples when the attempt budget runs out.
inline LinearTripleSystem random_linear_triple_system(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::vector<Triple> kept;
  if (n < 3) return LinearTripleSystem(n, {});
  std::mt19937_64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> pairs;
  const std::size_t budget = 1000 * (m + 1);
  for (std::size_t attempt = 0; attempt < budget && kept.size() < m; ++attempt) {
    Triple t{};
    t[0] = static_cast<Vertex>(detail::uniform_below(rng, n));
    do t[1] = static_cast<Vertex>(detail::uniform_below(rng, n)); while (t[1] == t[0]);
    do t[2] = static_cast<Vertex>(detail::uniform_below(rng, n)); while (t[2] == t[0] || t[2] == t[1]);
    std::sort(t.begin(), t.end());
    const std::array<std::pair<Vertex, Vertex>, 3> ps{std::pair{t[0], t[1]}, std::pair{t[0], t[2]},
                                                      std::pair{t[1], t[2]}};
    if (std::any_of(ps.begin(), ps.end(), [&](const auto& p) { return pairs.count(p) > 0; })) continue;
    pairs.insert(ps.begin(), ps.end());
    kept.push_back(t);
  }
  return LinearTripleSystem(n, std::move(kept));
}

/// Family name plus integer parameters, e.g. {"random", {{"n", 8}, {"m", 12}, {"seed", 1}}}.
struct GeneratorSpec {
  std::string family;
  std::map<std::string, std::uint64_t> params;

  std::uint64_t get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw PreconditionError("family '" + family + "' needs parameter '" + key + "'");
    return it->second;
  }
  std::uint64_t get(const std::string& key, std::uint64_t fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

using Generated = std::variant<ColoredGraph, LinearTripleSystem>;

/// Families: hypercube(dim), one-factorization(n), random(n, m, seed),
/// bipartite(left, right, m, seed), triples(n, m, seed).
inline Generated generate(const GeneratorSpec& spec) {
  if (spec.family == "hypercube") return hypercube(static_cast<unsigned>(spec.get("dim")));
  if (spec.family == "one-factorization") return complete_one_factorization(spec.get("n"));
  if (spec.family == "random") return random_colored(spec.get("n"), spec.get("m"), spec.get("seed", 0));
  if (spec.family == "bipartite") {
    return random_bipartite_colored(spec.get("left"), spec.get("right"), spec.get("m"), spec.get("seed", 0)).graph;
  }
  if (spec.family == "triples") return random_linear_triple_system(spec.get("n"), spec.get("m"), spec.get("seed", 0));
  throw PreconditionError("unknown family '" + spec.family + "'");
}

}  // namespace rainbow

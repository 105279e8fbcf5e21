#pragma once

// Brute-force reference computations. They only use the graph's edge lookup
// and never the counting or search code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow::oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix adjacency(const ColoredGraph& g) {
  Matrix a(g.n(), std::vector<std::int64_t>(g.n(), 0));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][t] * y[t][j];
  return z;
}

// A^l by repeated multiplication.
inline Matrix matrix_power(const ColoredGraph& g, unsigned l) {
  Matrix result(g.n(), std::vector<std::int64_t>(g.n(), 0));
  for (std::size_t i = 0; i < g.n(); ++i) result[i][i] = 1;
  const Matrix a = adjacency(g);
  for (unsigned s = 0; s < l; ++s) result = multiply(result, a);
  return result;
}

// Every vertex sequence v_0..v_len with v_len = v_0 is generated over all of
// V and kept when consecutive pairs are edges.
template <typename Visit>
void all_closed_sequences(const ColoredGraph& g, unsigned len, Visit visit) {
  std::vector<Vertex> seq(len + 1, 0);
  const auto n = static_cast<Vertex>(g.n());
  std::function<void(unsigned)> rec = [&](unsigned i) {
    if (i == len) {
      seq[len] = seq[0];
      for (unsigned t = 0; t < len; ++t)
        if (!g.has_edge(seq[t], seq[t + 1])) return;
      visit(seq);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      seq[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

// Number of cycle subgraphs of the given length: every vertex subset, every
// cyclic order starting at its minimum, halved for direction.
inline std::uint64_t cycle_copies(const ColoredGraph& g, unsigned length) {
  const std::size_t n = g.n();
  std::uint64_t total = 0;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - length, pick.end(), 1);
  do {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) subset.push_back(v);
    std::vector<Vertex> rest(subset.begin() + 1, subset.end());
    std::uint64_t orders = 0;
    do {
      bool ok = g.has_edge(subset[0], rest.front()) && g.has_edge(rest.back(), subset[0]);
      for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
      orders += ok;
    } while (std::next_permutation(rest.begin(), rest.end()));
    total += orders / 2;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

// Rainbow cycle of the given length exists (subset + permutation search).
inline bool has_rainbow_cycle(const ColoredGraph& g, unsigned length) {
  const std::size_t n = g.n();
  if (length > n) return false;
  std::vector<char> pick(n, 0);
  std::fill(pick.end() - length, pick.end(), 1);
  do {
    std::vector<Vertex> subset;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) subset.push_back(v);
    std::vector<Vertex> rest(subset.begin() + 1, subset.end());
    do {
      std::vector<Vertex> cyc{subset[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      std::set<Color> colors;
      bool ok = true;
      for (std::size_t i = 0; ok && i < cyc.size(); ++i) {
        auto c = g.edge_color(cyc[i], cyc[(i + 1) % cyc.size()]);
        ok = c && colors.insert(*c).second;
      }
      if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

// Maximum of e(S)/|S| over nonempty subsets, as (edges, vertices).
inline std::pair<std::int64_t, std::int64_t> max_density(const ColoredGraph& g) {
  std::pair<std::int64_t, std::int64_t> best{0, 1};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n()); ++mask) {
    std::int64_t e = 0, v = __builtin_popcountll(mask);
    for (const Edge& ed : g.edges()) e += ((mask >> ed.u) & 1) && ((mask >> ed.v) & 1);
    if (e * best.second > best.first * v) best = {e, v};
  }
  return best;
}

}  // namespace rainbow::oracle

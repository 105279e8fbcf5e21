#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rainbow/bigint.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/walks.hpp"

namespace rainbow {

/// Closed 2k-walk v_0 ... v_2k with v_0 = v_2k; colors[i] is the color of v_i v_{i+1}.
struct ClosedWalk {
  unsigned k = 0;
  std::vector<Vertex> vertices;  // 2k + 1 entries
  std::vector<Color> colors;     // 2k entries
};

/// Exact classification of every closed 2k-walk of a graph.
///
/// u_counts[s] = #walks with v_0 = v_{s+1}           (1 <= s <= 2k-3)
/// f_counts[t] = #walks with color(v_0v_1) = color(v_t v_{t+1})  (1 <= t <= 2k-1)
/// o_counts[s] = #walks with v_0 = v_2 = ... = v_2s  (0 <= s <= k)
///
/// Pair tallies are literal: vertex_pairs[i][j] counts walks with v_i = v_j
/// (i < j, (i, j) != (0, 2k)), color_pairs[i][j] walks whose edges i < j share
/// a color. Type tallies count walks having at least one degeneracy of the
/// given type under two readings of the index distance: the literal |i - j|
/// and the distance folded around the cycle, min(|i - j|, 2k - |i - j|).
struct DegeneracyProfile {
  unsigned k = 0;
  BigInt hom_count;
  BigInt rainbow_count;
  BigInt degenerate_count;
  std::map<unsigned, BigInt> u_counts;
  std::map<unsigned, BigInt> f_counts;
  std::map<unsigned, BigInt> o_counts;
  // v_0 = v_{s+1} tallies for legal s outside 1..2k-3 (only s = 2k-2).
  std::map<unsigned, BigInt> u_out_of_range;
  std::vector<std::vector<BigInt>> vertex_pairs;
  std::vector<std::vector<BigInt>> color_pairs;
  std::map<unsigned, BigInt> vertex_type_literal;
  std::map<unsigned, BigInt> vertex_type_folded;
  std::map<unsigned, BigInt> color_type_literal;
  std::map<unsigned, BigInt> color_type_folded;
};

namespace detail {

inline double census_work(const ColoredGraph& g, unsigned k) {
  return static_cast<double>(g.n()) *
         std::pow(static_cast<double>(g.max_degree()), static_cast<double>(2 * k - 1));
}

}  // namespace detail

/// Visits every closed 2k-walk depth-first: ascending start vertex, then
/// ascending neighbor id.
inline void for_each_closed_walk(const ColoredGraph& g, unsigned k,
                                 const std::function<void(const ClosedWalk&)>& visit) {
  const unsigned length = 2 * k;
  ClosedWalk walk{k, std::vector<Vertex>(length + 1), std::vector<Color>(length)};
  // cursor[i] = index into neighbors(vertices[i]) of the next edge to try
  std::vector<std::size_t> cursor(length + 1, 0);
  for (Vertex start = 0; start < g.n(); ++start) {
    walk.vertices[0] = start;
    cursor[0] = 0;
    unsigned depth = 0;
    while (true) {
      const auto& nbrs = g.neighbors(walk.vertices[depth]);
      if (depth == length || cursor[depth] == nbrs.size()) {
        if (depth == length && walk.vertices[length] == start) visit(walk);
        if (depth == 0) break;
        --depth;
        continue;
      }
      const Neighbor& nb = nbrs[cursor[depth]++];
      walk.colors[depth] = nb.color;
      walk.vertices[depth + 1] = nb.vertex;
      ++depth;
      cursor[depth] = 0;
    }
  }
}

/// True iff the walk revisits a vertex in the middle or repeats a color.
inline bool is_degenerate(const ClosedWalk& w) {
  const unsigned length = 2 * w.k;
  for (unsigned i = 0; i <= length; ++i) {
    for (unsigned j = i + 1; j <= length; ++j) {
      if (!(i == 0 && j == length) && w.vertices[i] == w.vertices[j]) return true;
    }
  }
  for (unsigned i = 0; i < length; ++i) {
    for (unsigned j = i + 1; j < length; ++j) {
      if (w.colors[i] == w.colors[j]) return true;
    }
  }
  return false;
}

/// Enumerates all closed 2k-walks and classifies them. Throws
/// WorkCapExceeded when n * Delta^(2k-1) exceeds the cap.
inline DegeneracyProfile walk_census(const ColoredGraph& g, unsigned k, const WorkCap& cap = {}) {
  if (k < 2) throw PreconditionError("walk_census needs k >= 2");
  cap.check("walk_census", detail::census_work(g, k));
  const unsigned length = 2 * k;

  std::uint64_t hom = 0, rainbow = 0;
  std::vector<std::uint64_t> u(length, 0), f(length, 0), o(k + 1, 0);
  std::vector<std::vector<std::uint64_t>> vpairs(length + 1, std::vector<std::uint64_t>(length + 1, 0));
  std::vector<std::vector<std::uint64_t>> cpairs(length, std::vector<std::uint64_t>(length, 0));
  std::vector<std::uint64_t> vlit(length + 1, 0), vfold(length + 1, 0), clit(length + 1, 0),
      cfold(length + 1, 0);
  std::vector<char> vlit_hit(length + 1), vfold_hit(length + 1), clit_hit(length + 1),
      cfold_hit(length + 1);

  for_each_closed_walk(g, k, [&](const ClosedWalk& w) {
    ++hom;
    std::fill(vlit_hit.begin(), vlit_hit.end(), 0);
    std::fill(vfold_hit.begin(), vfold_hit.end(), 0);
    std::fill(clit_hit.begin(), clit_hit.end(), 0);
    std::fill(cfold_hit.begin(), cfold_hit.end(), 0);
    bool degenerate = false;
    for (unsigned i = 0; i <= length; ++i) {
      for (unsigned j = i + 1; j <= length; ++j) {
        if ((i == 0 && j == length) || w.vertices[i] != w.vertices[j]) continue;
        degenerate = true;
        ++vpairs[i][j];
        const unsigned dist = j - i;
        vlit_hit[dist - 1] = 1;
        vfold_hit[std::min(dist, length - dist) - 1] = 1;
      }
    }
    for (unsigned i = 0; i < length; ++i) {
      for (unsigned j = i + 1; j < length; ++j) {
        if (w.colors[i] != w.colors[j]) continue;
        degenerate = true;
        ++cpairs[i][j];
        const unsigned dist = j - i;
        clit_hit[dist] = 1;
        cfold_hit[std::min(dist, length - dist)] = 1;
      }
    }
    if (!degenerate) ++rainbow;
    for (unsigned s = 1; s + 1 < length; ++s) {
      if (w.vertices[0] == w.vertices[s + 1]) ++u[s];
    }
    for (unsigned t = 1; t < length; ++t) {
      if (w.colors[0] == w.colors[t]) ++f[t];
    }
    for (unsigned s = 0; s <= k; ++s) {
      bool all = true;
      for (unsigned i = 1; i <= s && all; ++i) all = w.vertices[2 * i] == w.vertices[0];
      if (!all) break;
      ++o[s];
    }
    for (unsigned t = 0; t <= length; ++t) {
      vlit[t] += vlit_hit[t];
      vfold[t] += vfold_hit[t];
      clit[t] += clit_hit[t];
      cfold[t] += cfold_hit[t];
    }
  });

  DegeneracyProfile p;
  p.k = k;
  p.hom_count = hom;
  p.rainbow_count = rainbow;
  p.degenerate_count = hom - rainbow;
  for (unsigned s = 1; s + 1 < length; ++s) {
    if (s <= length - 3) {
      p.u_counts[s] = u[s];
    } else {
      p.u_out_of_range[s] = u[s];
    }
  }
  for (unsigned t = 1; t < length; ++t) p.f_counts[t] = f[t];
  for (unsigned s = 0; s <= k; ++s) p.o_counts[s] = o[s];
  p.vertex_pairs.assign(length + 1, std::vector<BigInt>(length + 1));
  p.color_pairs.assign(length, std::vector<BigInt>(length));
  for (unsigned i = 0; i <= length; ++i) {
    for (unsigned j = 0; j <= length; ++j) p.vertex_pairs[i][j] = vpairs[i][j];
  }
  for (unsigned i = 0; i < length; ++i) {
    for (unsigned j = 0; j < length; ++j) p.color_pairs[i][j] = cpairs[i][j];
  }
  for (unsigned t = 0; t <= length; ++t) {
    if (vlit[t]) p.vertex_type_literal[t] = vlit[t];
    if (vfold[t]) p.vertex_type_folded[t] = vfold[t];
    if (clit[t]) p.color_type_literal[t] = clit[t];
    if (cfold[t]) p.color_type_folded[t] = cfold[t];
  }
  return p;
}

/// |O_s| = sum over x of d(x)^s * w_{2k-2s}(x, x).
inline BigInt count_O(const ColoredGraph& g, unsigned k, unsigned s, const WorkCap& cap = {}) {
  if (s > k) throw PreconditionError("count_O needs s <= k");
  const auto diag = closed_walk_diagonal(g, 2 * (k - s), cap);
  BigInt total = 0;
  for (Vertex x = 0; x < g.n(); ++x) total += pow(BigInt(g.degree(x)), s) * diag[x];
  return total;
}

/// |U_1| = sum over x of d(x) * w_{2k-2}(x, x): a closed (2k-2)-walk at x
/// plus a pendant edge.
inline BigInt count_U1(const ColoredGraph& g, unsigned k, const WorkCap& cap = {}) {
  if (k < 1) throw PreconditionError("count_U1 needs k >= 1");
  const auto diag = closed_walk_diagonal(g, 2 * k - 2, cap);
  BigInt total = 0;
  for (Vertex x = 0; x < g.n(); ++x) total += BigInt(g.degree(x)) * diag[x];
  return total;
}

/// Number of cycle subgraphs of the given length, each counted once.
///
/// Backtracks from every vertex s over paths through vertices > s; each
/// cycle is then found once per direction.
inline BigInt count_cycle_copies(const ColoredGraph& g, unsigned length, const WorkCap& cap = {}) {
  if (length < 3) throw PreconditionError("cycle length must be at least 3");
  std::uint64_t work = 0, closed = 0;
  std::vector<char> on_path(g.n(), 0);
  std::function<void(Vertex, Vertex, unsigned)> extend = [&](Vertex start, Vertex at, unsigned edges) {
    if (++work > cap.limit) throw WorkCapExceeded("count_cycle_copies", static_cast<double>(work), cap.limit);
    for (const Neighbor& nb : g.neighbors(at)) {
      if (edges + 1 == length) {
        if (nb.vertex == start) ++closed;
        continue;
      }
      if (nb.vertex <= start || on_path[nb.vertex]) continue;
      on_path[nb.vertex] = 1;
      extend(start, nb.vertex, edges + 1);
      on_path[nb.vertex] = 0;
    }
  };
  for (Vertex s = 0; s < g.n(); ++s) {
    on_path[s] = 1;
    extend(s, s, 0);
    on_path[s] = 0;
  }
  return BigInt(closed / 2);
}

}  // namespace rainbow

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/bigint.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Dense n x n table of exact walk counts for one walk species and length.
struct WalkTable {
  enum class Species { Plain, Star, ColorRestricted };

  Species species = Species::Plain;
  unsigned length = 0;
  std::size_t n = 0;
  std::vector<BigInt> counts;  // row-major, counts[u * n + v]
  // Only meaningful for ColorRestricted.
  unsigned position = 0;
  Color color = 0;

  const BigInt& operator()(Vertex u, Vertex v) const { return counts[u * n + v]; }
};

namespace detail {

inline double walk_work(const ColoredGraph& g, unsigned length) {
  auto n = static_cast<double>(g.n());
  return n * n * static_cast<double>(length) * static_cast<double>(g.max_degree());
}

template <typename Count>
std::vector<Count> widen_all(const std::vector<Count>& xs) {
  return xs;
}

inline std::vector<BigInt> widen_all(const std::vector<std::uint64_t>& xs) {
  return {xs.begin(), xs.end()};
}

// One propagation step: next[y] = sum over neighbors x of y of cur[x].
// When `only_color` is set, only edges of that color are used.
template <typename Count>
std::vector<Count> step(const ColoredGraph& g, const std::vector<Count>& cur,
                        std::optional<Color> only_color = std::nullopt) {
  std::vector<Count> next(g.n(), Count{0});
  for (Vertex y = 0; y < g.n(); ++y) {
    for (const Neighbor& nb : g.neighbors(y)) {
      if (only_color && nb.color != *only_color) continue;
      if (!is_zero(cur[nb.vertex])) add_to(next[y], cur[nb.vertex]);
    }
  }
  return next;
}

template <typename Count>
std::vector<Count> unit_vector(std::size_t n, Vertex u) {
  std::vector<Count> vec(n, Count{0});
  vec[u] = Count{1};
  return vec;
}

template <typename Count>
std::vector<Count> plain_rows(const ColoredGraph& g, unsigned length) {
  const std::size_t n = g.n();
  std::vector<Count> table(n * n, Count{0});
  for (Vertex u = 0; u < n; ++u) {
    auto cur = unit_vector<Count>(n, u);
    for (unsigned s = 0; s < length; ++s) cur = step(g, cur);
    std::copy(cur.begin(), cur.end(), table.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return table;
}

// Star-walks from u: every even-indexed vertex is forced back to u.
template <typename Count>
std::vector<Count> star_rows(const ColoredGraph& g, unsigned length) {
  const std::size_t n = g.n();
  std::vector<Count> table(n * n, Count{0});
  for (Vertex u = 0; u < n; ++u) {
    auto cur = unit_vector<Count>(n, u);
    for (unsigned s = 1; s <= length; ++s) {
      cur = step(g, cur);
      if (s % 2 == 0) {
        for (Vertex y = 0; y < n; ++y) {
          if (y != u) cur[y] = Count{0};
        }
      }
    }
    std::copy(cur.begin(), cur.end(), table.begin() + static_cast<std::ptrdiff_t>(u * n));
  }
  return table;
}

template <typename Count>
std::vector<Count> closed_diagonal(const ColoredGraph& g, unsigned length) {
  std::vector<Count> diag(g.n(), Count{0});
  for (Vertex u = 0; u < g.n(); ++u) {
    auto cur = unit_vector<Count>(g.n(), u);
    for (unsigned s = 0; s < length; ++s) cur = step(g, cur);
    diag[u] = cur[u];
  }
  return diag;
}

template <typename Count>
std::vector<Count> restricted_row(const ColoredGraph& g, unsigned length, unsigned position,
                                  Vertex u, Color c) {
  auto cur = unit_vector<Count>(g.n(), u);
  for (unsigned s = 1; s <= length; ++s) {
    cur = step(g, cur, s == position ? std::optional<Color>(c) : std::nullopt);
  }
  return cur;
}

}  // namespace detail

/// w_l(u, v): number of walks of length l from u to v.
inline WalkTable walk_counts(const ColoredGraph& g, unsigned length, const WorkCap& cap = {}) {
  cap.check("walk_counts", detail::walk_work(g, length));
  WalkTable table{WalkTable::Species::Plain, length, g.n(), {}};
  table.counts = detail::with_overflow_fallback(
      [&](auto zero) { return detail::plain_rows<decltype(zero)>(g, length); },
      [](const auto& xs) { return detail::widen_all(xs); });
  return table;
}

/// sigma_l(u, v): walks u_0..u_l from u to v with u_0 = u_2 = u_4 = ... .
/// Not symmetric in general.
inline WalkTable star_walk_counts(const ColoredGraph& g, unsigned length, const WorkCap& cap = {}) {
  cap.check("star_walk_counts", detail::walk_work(g, length));
  WalkTable table{WalkTable::Species::Star, length, g.n(), {}};
  table.counts = detail::with_overflow_fallback(
      [&](auto zero) { return detail::star_rows<decltype(zero)>(g, length); },
      [](const auto& xs) { return detail::widen_all(xs); });
  return table;
}

/// w_l(x, x) for every x.
inline std::vector<BigInt> closed_walk_diagonal(const ColoredGraph& g, unsigned length,
                                                const WorkCap& cap = {}) {
  cap.check("closed_walk_diagonal", detail::walk_work(g, length));
  return detail::with_overflow_fallback(
      [&](auto zero) { return detail::closed_diagonal<decltype(zero)>(g, length); },
      [](const auto& xs) { return detail::widen_all(xs); });
}

/// |Hom(C_2k, G)| as the number of closed 2k-walks with labelled vertices.
inline BigInt hom_cycle_count(const ColoredGraph& g, unsigned k, const WorkCap& cap = {}) {
  BigInt total = 0;
  for (const BigInt& x : closed_walk_diagonal(g, 2 * k, cap)) total += x;
  return total;
}

/// |Hom(S_k, G)| = sum of d(v)^k: the centre picks v, each leaf a neighbor.
inline BigInt hom_star_count(const ColoredGraph& g, unsigned k) {
  BigInt total = 0;
  for (Vertex v = 0; v < g.n(); ++v) total += pow(BigInt(g.degree(v)), k);
  return total;
}

/// Walks of `length` from u to v whose `position`-th edge (1-based) has color c.
inline BigInt color_restricted_walk_count(const ColoredGraph& g, unsigned length, unsigned position,
                                          Vertex u, Vertex v, Color c, const WorkCap& cap = {}) {
  if (position < 1 || position > length) {
    throw PreconditionError("restricted position " + std::to_string(position) +
                            " outside 1.." + std::to_string(length));
  }
  if (u >= g.n() || v >= g.n()) throw PreconditionError("vertex id out of range");
  cap.check("color_restricted_walk_count",
            static_cast<double>(length) * 2.0 * static_cast<double>(g.edge_count() + g.n()));
  return detail::with_overflow_fallback(
      [&](auto zero) { return detail::restricted_row<decltype(zero)>(g, length, position, u, c)[v]; },
      [](std::uint64_t x) { return BigInt(x); });
}

/// Full table of w~_{length,position}(., ., c).
inline WalkTable color_restricted_walk_counts(const ColoredGraph& g, unsigned length,
                                              unsigned position, Color c, const WorkCap& cap = {}) {
  if (position < 1 || position > length) {
    throw PreconditionError("restricted position " + std::to_string(position) +
                            " outside 1.." + std::to_string(length));
  }
  cap.check("color_restricted_walk_counts", detail::walk_work(g, length));
  WalkTable table{WalkTable::Species::ColorRestricted, length, g.n(), {}};
  table.position = position;
  table.color = c;
  table.counts.reserve(g.n() * g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    auto row = detail::with_overflow_fallback(
        [&](auto zero) { return detail::restricted_row<decltype(zero)>(g, length, position, u, c); },
        [](const auto& xs) { return detail::widen_all(xs); });
    table.counts.insert(table.counts.end(), row.begin(), row.end());
  }
  return table;
}

}  // namespace rainbow

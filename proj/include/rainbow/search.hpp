#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rainbow/detail/rng.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// A cycle c_0 ... c_{m-1}; colors[i] is the color of c_i c_{i+1 mod m}.
struct CycleCertificate {
  std::vector<Vertex> cycle;
  std::vector<Color> colors;
};

struct CheckResult {
  bool ok = true;
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

namespace detail {

class RainbowSearch {
 public:
  RainbowSearch(const ColoredGraph& g, const WorkCap& cap)
      : g_(g), cap_(cap), on_path_(g.n(), 0), used_(g.colors().size(), 0) {}

  // Exhaustive search for a rainbow cycle of exactly `length` edges whose
  // smallest vertex is the start; neighbors are tried in ascending order.
  std::optional<CycleCertificate> find(unsigned length) {
    if (length < 3 || length > g_.n() || length > g_.colors().size()) return std::nullopt;
    length_ = length;
    for (Vertex s = 0; s < g_.n(); ++s) {
      path_ = {s};
      on_path_[s] = 1;
      const bool found = extend(s);
      on_path_[s] = 0;
      if (found) return certificate();
    }
    return std::nullopt;
  }

 private:
  bool extend(Vertex start) {
    if (++work_ > cap_.limit) throw WorkCapExceeded("find_rainbow_cycle", static_cast<double>(work_), cap_.limit);
    const Vertex at = path_.back();
    const bool closing = path_.size() == length_;
    for (const Neighbor& nb : g_.neighbors(at)) {
      if (used_[nb.color_index]) continue;
      if (closing) {
        if (nb.vertex == start) {
          colors_.push_back(nb.color);
          return true;
        }
        continue;
      }
      if (nb.vertex <= start || on_path_[nb.vertex]) continue;
      used_[nb.color_index] = 1;
      on_path_[nb.vertex] = 1;
      path_.push_back(nb.vertex);
      colors_.push_back(nb.color);
      if (extend(start)) return true;
      colors_.pop_back();
      path_.pop_back();
      on_path_[nb.vertex] = 0;
      used_[nb.color_index] = 0;
    }
    return false;
  }

  CycleCertificate certificate() {
    CycleCertificate cert{path_, colors_};
    std::fill(on_path_.begin(), on_path_.end(), 0);
    std::fill(used_.begin(), used_.end(), 0);
    path_.clear();
    colors_.clear();
    return cert;
  }

  const ColoredGraph& g_;
  const WorkCap& cap_;
  std::uint64_t work_ = 0;
  unsigned length_ = 0;
  std::vector<Vertex> path_;
  std::vector<Color> colors_;
  std::vector<char> on_path_;
  std::vector<char> used_;
};

}  // namespace detail

/// Rainbow cycle of exactly `length` edges, or a shortest one when no length
/// is given. std::nullopt is a certified non-existence claim; if the work cap
/// is hit WorkCapExceeded is thrown instead.
inline std::optional<CycleCertificate> find_rainbow_cycle(const ColoredGraph& g,
                                                          std::optional<unsigned> length = std::nullopt,
                                                          const WorkCap& cap = {}) {
  detail::RainbowSearch search(g, cap);
  if (length) return search.find(*length);
  const auto longest = static_cast<unsigned>(std::min(g.n(), g.colors().size()));
  for (unsigned len = 3; len <= longest; ++len) {
    if (auto cert = search.find(len)) return cert;
  }
  return std::nullopt;
}

/// Checks a certificate against the graph without using the search code.
inline CheckResult certify(const ColoredGraph& g, const CycleCertificate& cert) {
  const auto& c = cert.cycle;
  const std::size_t m = c.size();
  if (m < 3) return CheckResult::fail("not a cycle: fewer than 3 vertices");
  if (!cert.colors.empty() && cert.colors.size() != m) {
    return CheckResult::fail("color list has " + std::to_string(cert.colors.size()) + " entries for " +
                             std::to_string(m) + " edges");
  }
  std::set<Vertex> vertices;
  for (Vertex v : c) {
    if (v >= g.n()) return CheckResult::fail("vertex " + std::to_string(v) + " out of range");
    if (!vertices.insert(v).second) return CheckResult::fail("not a cycle: vertex " + std::to_string(v) + " repeats");
  }
  std::set<Color> colors;
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex a = c[i], b = c[(i + 1) % m];
    auto color = g.edge_color(a, b);
    if (!color) return CheckResult::fail("not a cycle: " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    if (!cert.colors.empty() && cert.colors[i] != *color) {
      return CheckResult::fail("edge " + std::to_string(a) + "-" + std::to_string(b) + " has color " +
                               std::to_string(*color) + ", certificate says " + std::to_string(cert.colors[i]));
    }
    if (!colors.insert(*color).second) return CheckResult::fail("repeated color " + std::to_string(*color));
  }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Loose cycles in linear triple systems
// ---------------------------------------------------------------------------

/// Cyclic sequence of triples; links[i] is the vertex shared by triples[i]
/// and triples[i+1 mod m].
struct LooseCycle {
  std::vector<Triple> triples;
  std::vector<Vertex> links;
};

inline CheckResult verify_loose_cycle(const LinearTripleSystem& h, const LooseCycle& lc) {
  const std::size_t m = lc.triples.size();
  if (m < 3) return CheckResult::fail("a loose cycle needs at least 3 triples");
  if (lc.links.size() != m) return CheckResult::fail("link count differs from triple count");
  auto name = [](const Triple& t) {
    return "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
  };
  auto shared = [](Triple a, Triple b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  for (const Triple& t : lc.triples) {
    if (!h.contains(t)) return CheckResult::fail("triple " + name(t) + " not in H");
  }
  std::set<Vertex> links(lc.links.begin(), lc.links.end());
  if (links.size() != m) return CheckResult::fail("link vertices are not distinct");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto common = shared(lc.triples[i], lc.triples[j]);
      const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      if (!consecutive) {
        if (!common.empty()) {
          return CheckResult::fail("non-consecutive triples " + name(lc.triples[i]) + " and " +
                                   name(lc.triples[j]) + " intersect");
        }
        continue;
      }
      const Vertex link = j == i + 1 ? lc.links[i] : lc.links[j];
      if (common.size() != 1 || common.front() != link) {
        return CheckResult::fail("consecutive triples " + name(lc.triples[i]) + " and " +
                                 name(lc.triples[j]) + " do not share exactly the link vertex " +
                                 std::to_string(link));
      }
    }
  }
  return CheckResult::pass();
}

/// One tripartition tried by the reduction.
struct ReductionAttempt {
  std::size_t attempt = 0;
  std::size_t transversal = 0;  // triples with one vertex in each part
  bool qualified = false;       // 9 * transversal >= e(H)
  std::vector<std::size_t> aux_edges;  // per rotation tried
  std::optional<unsigned> rotation;    // rotation that produced the cycle
};

struct ReductionTranscript {
  std::uint64_t seed = 0;
  std::size_t retries = 0;
  std::vector<ReductionAttempt> attempts;
  std::vector<std::uint8_t> parts;  // part index of every vertex in the winning attempt
  std::optional<CycleCertificate> rainbow_cycle;
};

struct ReductionResult {
  std::optional<LooseCycle> cycle;  // nullopt is one-sided: H may still have a loose cycle
  ReductionTranscript transcript;
};

/// Auxiliary colored bipartite graph on (V1, V2): an edge v1 v2 of color v3
/// for each triple {v1, v2, v3} with v_i in V_i. Vertex ids are those of H.
inline GraphDocument auxiliary_graph(const LinearTripleSystem& h, const std::vector<std::uint8_t>& parts,
                                     unsigned rotation) {
  GraphDocument doc{h.n(), {}};
  for (const Triple& t : h.triples()) {
    std::array<std::optional<Vertex>, 3> role;
    for (Vertex v : t) {
      const unsigned r = (parts[v] + 3 - rotation) % 3;
      role[r] = v;
    }
    if (!role[0] || !role[1] || !role[2]) continue;
    doc.edges.push_back(detail::normalized({*role[0], *role[1], *role[2]}));
  }
  return doc;
}

inline LooseCycle lift_rainbow_cycle(const CycleCertificate& cert) {
  LooseCycle lc;
  const std::size_t m = cert.cycle.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex next = cert.cycle[(i + 1) % m];
    Triple t{cert.cycle[i], next, static_cast<Vertex>(cert.colors[i])};
    std::sort(t.begin(), t.end());
    lc.triples.push_back(t);
    lc.links.push_back(next);
  }
  return lc;
}

/// Seeded search for a loose cycle through the bipartite auxiliary graph.
///
/// Draws equitable random tripartitions; each one with at least e(H)/9
/// transversal triples is tried under the three cyclic role assignments.
/// Throws PartitionFailure if no drawn partition qualifies.
inline ReductionResult loose_cycle_via_reduction(const LinearTripleSystem& h, std::uint64_t seed,
                                                 std::size_t retries, const WorkCap& cap = {}) {
  ReductionResult result;
  auto& log = result.transcript;
  log.seed = seed;
  log.retries = retries;
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(h.n());
  for (Vertex v = 0; v < h.n(); ++v) order[v] = v;

  bool any_qualified = false;
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    detail::shuffle(order, rng);
    std::vector<std::uint8_t> parts(h.n());
    for (std::size_t pos = 0; pos < order.size(); ++pos) parts[order[pos]] = static_cast<std::uint8_t>(pos % 3);

    ReductionAttempt rec;
    rec.attempt = attempt;
    for (const Triple& t : h.triples()) {
      std::array<bool, 3> hit{};
      for (Vertex v : t) hit[parts[v]] = true;
      rec.transversal += hit[0] && hit[1] && hit[2];
    }
    rec.qualified = 9 * rec.transversal >= h.size();
    if (!rec.qualified) {
      log.attempts.push_back(std::move(rec));
      continue;
    }
    any_qualified = true;
    for (unsigned rotation = 0; rotation < 3; ++rotation) {
      GraphDocument doc = auxiliary_graph(h, parts, rotation);
      rec.aux_edges.push_back(doc.edges.size());
      auto problems = validate(doc);
      if (!problems.empty()) {
        throw LemmaViolation("auxiliary graph of a linear system is improper: " + problems.front().describe());
      }
      ColoredGraph aux = ColoredGraph::from_document(doc);
      if (auto cert = find_rainbow_cycle(aux, std::nullopt, cap)) {
        rec.rotation = rotation;
        log.attempts.push_back(std::move(rec));
        log.parts = parts;
        log.rainbow_cycle = cert;
        LooseCycle lc = lift_rainbow_cycle(*cert);
        if (auto check = verify_loose_cycle(h, lc); !check) {
          throw LemmaViolation("lifted loose cycle fails verification: " + check.reason);
        }
        result.cycle = std::move(lc);
        return result;
      }
    }
    log.attempts.push_back(std::move(rec));
  }
  if (!any_qualified) {
    throw PartitionFailure("no tripartition among " + std::to_string(retries) +
                           " attempts has e(H)/9 transversal triples");
  }
  return result;
}

}  // namespace rainbow

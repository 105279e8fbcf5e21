#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/bigint.hpp"
#include "rainbow/census.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/regularize.hpp"
#include "rainbow/search.hpp"
#include "rainbow/walks.hpp"

namespace rainbow {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Status { Pass, Fail, Skipped, Info };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEq: return "<=";
    case Relation::GreaterEq: return ">=";
    case Relation::Equal: return "==";
  }
  return "?";
}

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
    case Status::Info: return "INFO";
  }
  return "?";
}

/// One exact comparison. lhs/rhs are decimal integers or reduced fractions.
struct CheckRecord {
  std::string name;
  std::string lhs;
  std::string rhs;
  Relation relation = Relation::LessEq;
  Status status = Status::Pass;
  std::string condition = "none";
  std::vector<std::pair<std::string, std::string>> context;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  /// False iff some check failed; SKIPPED and INFO never fail a report.
  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
  }

  const CheckRecord* find(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckRecord& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }

  std::vector<const CheckRecord*> with_prefix(const std::string& prefix) const {
    std::vector<const CheckRecord*> out;
    for (const auto& c : checks) {
      if (c.name.rfind(prefix, 0) == 0) out.push_back(&c);
    }
    return out;
  }
};

inline bool holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::LessEq: return lhs <= rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

namespace detail {

class ReportBuilder {
 public:
  CheckRecord& compare(std::string name, const Rational& lhs, Relation rel, const Rational& rhs,
                       std::string condition = "none") {
    CheckRecord rec{std::move(name), to_string(lhs), to_string(rhs), rel,
                    holds(lhs, rel, rhs) ? Status::Pass : Status::Fail, std::move(condition), {}};
    report_.checks.push_back(std::move(rec));
    return report_.checks.back();
  }

  CheckRecord& info(std::string name, const Rational& lhs, Relation rel, const Rational& rhs,
                    std::string condition) {
    auto& rec = compare(std::move(name), lhs, rel, rhs, std::move(condition));
    rec.context.emplace_back("holds", rec.status == Status::Pass ? "yes" : "no");
    rec.status = Status::Info;
    return rec;
  }

  CheckRecord& skipped(std::string name, Relation rel, std::string condition) {
    report_.checks.push_back({std::move(name), "", "", rel, Status::Skipped, std::move(condition), {}});
    return report_.checks.back();
  }

  CheckRecord& flag(std::string name, bool ok, std::string detail_text) {
    CheckRecord rec{std::move(name), ok ? "1" : "0", "1", Relation::Equal, ok ? Status::Pass : Status::Fail,
                    "none", {}};
    if (!detail_text.empty()) rec.context.emplace_back("detail", std::move(detail_text));
    report_.checks.push_back(std::move(rec));
    return report_.checks.back();
  }

  VerificationReport take() { return std::move(report_); }

 private:
  VerificationReport report_;
};

inline Rational q(const BigInt& x) { return Rational(x); }
inline Rational q(std::size_t x) { return Rational(static_cast<std::int64_t>(x)); }

}  // namespace detail

struct VerifyOptions {
  bool assume_rainbow_free = false;
  std::optional<BipartitionTag> sides;
  WorkCap cap;
};

/// Evaluates every inequality of the closed-walk argument on one instance.
///
/// Universal checks (Cauchy-Schwarz bounds on U_s and F_t, log-convexity of
/// O_s, the union bound, symmetry, Sidorenko) always run. Checks that need
/// the graph to be rainbow-2k-free run when the exhaustive search certifies
/// it, or when the caller assumes it.
inline VerificationReport verify_graph(const ColoredGraph& g, unsigned k, const VerifyOptions& opts = {}) {
  if (k < 2) throw PreconditionError("verify_graph needs k >= 2");
  using detail::q;
  const DegeneracyProfile p = walk_census(g, k, opts.cap);
  const unsigned len = 2 * k;
  detail::ReportBuilder out;

  // census against the closed-form counters
  out.compare("census.hom_equals_closed_form", q(p.hom_count), Relation::Equal,
              q(hom_cycle_count(g, k, opts.cap)));
  for (unsigned s = 0; s <= k; ++s) {
    out.compare("census.O" + std::to_string(s) + "_equals_closed_form", q(p.o_counts.at(s)), Relation::Equal,
                q(count_O(g, k, s, opts.cap)));
  }
  out.compare("census.U1_equals_closed_form", q(p.u_counts.at(1)), Relation::Equal, q(count_U1(g, k, opts.cap)));
  out.compare("census.Ok_equals_star_homs", q(p.o_counts.at(k)), Relation::Equal, q(hom_star_count(g, k)));
  out.compare("census.F1_equals_U1", q(p.f_counts.at(1)), Relation::Equal, q(p.u_counts.at(1)));
  out.compare("census.O1_equals_U1", q(p.o_counts.at(1)), Relation::Equal, q(p.u_counts.at(1)));

  for (unsigned s = 1; s <= len - 3; ++s) {
    out.compare("symmetry.U" + std::to_string(s), q(p.u_counts.at(s)), Relation::Equal,
                q(p.u_counts.at(len - 2 - s)));
  }
  for (unsigned t = 1; t < len; ++t) {
    out.compare("symmetry.F" + std::to_string(t), q(p.f_counts.at(t)), Relation::Equal, q(p.f_counts.at(len - t)));
  }

  // |U_s|^2 <= |U_1| |U_{2s-1}|; 2s-1 is taken at the symmetric representative.
  const BigInt& u1 = p.u_counts.at(1);
  for (unsigned s = 1; s <= len - 3; ++s) {
    const unsigned rep = std::min(s, len - 2 - s);
    const unsigned j = 2 * rep - 1;
    const BigInt& us = p.u_counts.at(s);
    auto& rec = out.compare("cauchy_schwarz.U" + std::to_string(s) + "_squared", q(us * us), Relation::LessEq,
                            q(u1 * p.u_counts.at(j)));
    rec.context.emplace_back("index_map", "2s-1 with s=" + std::to_string(rep) + " -> U" + std::to_string(j));
    out.compare("cauchy_schwarz.U" + std::to_string(s) + "_le_U1", q(us), Relation::LessEq, q(u1));
  }
  const BigInt& f1 = p.f_counts.at(1);
  for (unsigned t = 1; t < len; ++t) {
    const unsigned rep = std::min(t, len - t);
    const unsigned j = 2 * rep - 1;
    const BigInt& ft = p.f_counts.at(t);
    auto& rec = out.compare("cauchy_schwarz.F" + std::to_string(t) + "_squared", q(ft * ft), Relation::LessEq,
                            q(f1 * p.f_counts.at(j)));
    rec.context.emplace_back("index_map", "2t-1 with t=" + std::to_string(rep) + " -> F" + std::to_string(j));
    out.compare("cauchy_schwarz.F" + std::to_string(t) + "_le_F1", q(ft), Relation::LessEq, q(f1));
  }

  // log-convexity of |O_s|
  for (unsigned s = 1; s < k; ++s) {
    const BigInt& os = p.o_counts.at(s);
    out.compare("log_convexity.O" + std::to_string(s), q(os * os), Relation::LessEq,
                q(p.o_counts.at(s - 1) * p.o_counts.at(s + 1)));
  }

  // union bound over degeneracy types
  {
    BigInt sum = 0;
    for (unsigned s = 1; s < k; ++s) sum += p.u_counts.at(s);
    for (unsigned s = 1; s <= k; ++s) sum += p.f_counts.at(s);
    out.compare("union_bound.degenerate", q(p.degenerate_count), Relation::LessEq, q(BigInt(2 * k) * sum));
  }

  // Sidorenko for even cycles: Hom(C_2k) >= d^(2k)
  const Rational d = g.average_degree();
  out.compare("sidorenko.hom_ge_d_pow_2k", q(p.hom_count), Relation::GreaterEq, pow(d, len));

  // rainbow-freeness
  auto cert = find_rainbow_cycle(g, len, opts.cap);
  out.flag("search.agrees_with_census", cert.has_value() == (p.rainbow_count > 0),
           "census rainbow walks " + p.rainbow_count.str() + ", search " + (cert ? "found" : "none"));
  if (cert) out.flag("search.certificate_valid", static_cast<bool>(certify(g, *cert)), certify(g, *cert).reason);

  std::optional<std::string> condition;
  if (!cert) {
    condition = "rainbow-free certified: yes";
  } else if (opts.assume_rainbow_free) {
    condition = "rainbow-free certified: no (ASSUMED)";
  }
  const BigInt four_k2 = BigInt(4) * k * k;
  if (condition) {
    out.compare("rainbow_free.hom_le_4k2_U1", q(p.hom_count), Relation::LessEq, q(four_k2 * u1), *condition);
    out.compare("rainbow_free.hom_le_2k_pow_2k_star", q(p.hom_count), Relation::LessEq,
                q(pow(BigInt(2 * k), len) * hom_star_count(g, k)), *condition);
    out.compare("rainbow_free.O0_le_4k2_pow_k_Ok", q(p.o_counts.at(0)), Relation::LessEq,
                q(pow(four_k2, k) * p.o_counts.at(k)), *condition);
  } else {
    const std::string why = "rainbow-free certified: no (rainbow " + std::to_string(len) + "-cycle exists)";
    out.skipped("rainbow_free.hom_le_4k2_U1", Relation::LessEq, why);
    out.skipped("rainbow_free.hom_le_2k_pow_2k_star", Relation::LessEq, why);
    out.skipped("rainbow_free.O0_le_4k2_pow_k_Ok", Relation::LessEq, why);
  }

  if (opts.sides) {
    const DegreeStats stats = degree_profile(g, k, *opts.sides);
    auto& rec = out.compare("bipartite_hom.hom_ge_dA_k_dB_k", q(p.hom_count), Relation::GreaterEq,
                            pow(*stats.left_average, k) * pow(*stats.right_average, k));
    rec.context.emplace_back("d_A", to_string(*stats.left_average));
    rec.context.emplace_back("d_B", to_string(*stats.right_average));
  }

  // Supersaturation: copies of C_2k >= 1/2 (2^12 k)^(-k) d^(2k), meaningful
  // only when d >= 2*10^5 k^3 n^(1/k).
  {
    const BigInt copies = count_cycle_copies(g, len, opts.cap);
    const Rational bound = pow(d, len) / (2 * pow(Rational(4096 * static_cast<std::int64_t>(k)), k));
    const Rational c = Rational(200000) * k * k * k;
    const bool hypothesis = pow(d, k) >= pow(c, k) * detail::q(g.n());
    if (hypothesis) {
      out.compare("supersaturation.cycle_copies", q(copies), Relation::GreaterEq, bound, "hypothesis met");
    } else {
      out.info("supersaturation.cycle_copies", q(copies), Relation::GreaterEq, bound,
               "hypothesis d >= 2e5 k^3 n^(1/k) not met");
    }
  }

  // Edge thresholds for a rainbow 2k-cycle; two constants are in circulation.
  for (auto [name, power] : {std::pair{"threshold.edges_k3", 3u}, std::pair{"threshold.edges_k2", 2u}}) {
    const Rational c = Rational(100000) * pow(Rational(k), power);
    // e >= c n^(1+1/k)  <=>  e^k >= c^k n^(k+1)
    out.info(name, pow(q(g.edge_count()), k), Relation::GreaterEq, pow(c, k) * pow(q(g.n()), k + 1),
             "compares e(G)^k with (1e5 k^" + std::to_string(power) + ")^k n^(k+1)");
  }
  return out.take();
}

/// Re-checks every conclusion of the vertex-splitting step.
inline VerificationReport verify_regularization(const ColoredGraph& g, const SplitResult& r) {
  using detail::q;
  detail::ReportBuilder out;
  const ColoredGraph& h = r.graph;
  out.compare("split.delta_is_min_degree", q(r.delta), Relation::Equal, q(g.min_degree()));
  out.compare("split.edges_preserved", q(h.edge_count()), Relation::Equal, q(g.edge_count()));
  out.compare("split.vertices_at_least_n", q(h.n()), Relation::GreaterEq, q(g.n()));
  if (r.delta > 0) {
    out.compare("split.vertices_at_most_4e_over_delta", q(h.n()), Relation::LessEq,
                Rational(4 * static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(r.delta)));
  }
  out.compare("split.min_degree_ge_delta_half", q(h.min_degree()) * 2, Relation::GreaterEq, q(r.delta));
  out.compare("split.max_degree_le_delta", q(h.max_degree()), Relation::LessEq, q(r.delta));
  auto problems = validate(h.document());
  out.flag("split.proper_coloring", problems.empty(), problems.empty() ? "" : problems.front().describe());
  auto bad = check_color_preserving(h, g, r.psi);
  out.flag("split.psi_color_preserving", !bad, bad.value_or(""));
  return out.take();
}

/// Re-checks conclusions (1)-(3) of the lopsided regularization and its
/// intermediate certificates.
inline VerificationReport verify_regularization(const ColoredGraph& g, const BipartitionTag& sides,
                                                const LopsidedResult& r) {
  using detail::q;
  detail::ReportBuilder out;
  const std::size_t n = g.n();
  const Rational d = g.average_degree();
  const unsigned k = r.k;
  out.compare("lopsided.average_degree", r.average_degree, Relation::Equal, d);

  // |A| >= (1/k) 2^(-ki/(k-1)) n  <=>  (|A| k)^(k-1) 2^(ki) >= n^(k-1)
  out.compare("lopsided.A_size", pow(q(r.A.size() * k), k - 1) * detail::pow2(static_cast<int>(k) * r.i),
              Relation::GreaterEq, pow(q(n), k - 1));
  out.compare("lopsided.B_size", q(r.B.size()) * 64, Relation::GreaterEq, q(n));

  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (Vertex a : r.A) in_a[a] = 1;
  for (Vertex b : r.B) in_b[b] = 1;
  bool disjoint = true;
  for (Vertex v = 0; v < n; ++v) disjoint = disjoint && !(in_a[v] && in_b[v]);
  out.flag("lopsided.A_B_disjoint", disjoint, "");

  std::optional<std::string> edge_problem;
  for (const Edge& e : r.subgraph.edges()) {
    if (g.edge_color(e.u, e.v) != e.color) {
      edge_problem = "edge " + to_string(e) + " is not an edge of G";
      break;
    }
    if (!((in_a[e.u] && in_b[e.v]) || (in_a[e.v] && in_b[e.u]))) {
      edge_problem = "edge " + to_string(e) + " does not join A to B";
      break;
    }
  }
  out.flag("lopsided.subgraph_between_A_B", !edge_problem, edge_problem.value_or(""));
  bool sided = true;
  for (const Edge& e : r.subgraph.edges()) sided = sided && sides.side[e.u] != sides.side[e.v];
  out.flag("lopsided.respects_bipartition", sided, "");

  const Rational lo = detail::pow2(r.i - 6) * d, hi = detail::pow2(r.i - 5) * d;
  std::size_t a_min = r.A.empty() ? 0 : r.subgraph.degree(r.A.front()), a_max = a_min;
  for (Vertex a : r.A) {
    a_min = std::min(a_min, r.subgraph.degree(a));
    a_max = std::max(a_max, r.subgraph.degree(a));
  }
  out.compare("lopsided.A_degree_low", q(a_min), Relation::GreaterEq, lo).context.emplace_back("i", std::to_string(r.i));
  out.compare("lopsided.A_degree_high", q(a_max), Relation::LessEq, hi).context.emplace_back("i", std::to_string(r.i));
  std::size_t b_max = 0;
  for (Vertex b : r.B) b_max = std::max(b_max, r.subgraph.degree(b));
  out.compare("lopsided.B_degree", q(b_max), Relation::LessEq, 4 * d);
  out.compare("lopsided.peeled_edges", q(r.peeled.edge_count()) * 8, Relation::GreaterEq, q(g.edge_count()));
  return out.take();
}

}  // namespace rainbow

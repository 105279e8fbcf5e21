#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rainbow/census.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/regularize.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

// Canonical documents:
//   graph       {"n": N, "edges": [[u, v, color], ...]}   u < v
//   hypergraph  {"n": N, "triples": [[a, b, c], ...]}     a < b < c
//   sides       {"sides": [0 | 1, ...]}                   0 = LEFT
// Exact counts are written as decimal strings.

namespace rainbow {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::uint64_t as_unsigned(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw ParseError(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline Vertex as_vertex(const Json& j, const std::string& what) {
  const auto x = as_unsigned(j, what);
  if (x > std::numeric_limits<Vertex>::max()) throw InvariantError(what + " out of range");
  return static_cast<Vertex>(x);
}

template <typename Map>
Json count_map(const Map& m) {
  Json out = Json::object();
  for (const auto& [key, value] : m) out[std::to_string(key)] = value.str();
  return out;
}

inline Json count_matrix(const std::vector<std::vector<BigInt>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline GraphDocument parse_graph_document(std::string_view text) {
  const Json j = detail::parse_json(text);
  GraphDocument doc;
  doc.n = detail::as_unsigned(detail::field(j, "n"), "n");
  const Json& edges = detail::field(j, "edges");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 3) throw ParseError("each edge must be [u, v, color]");
    doc.edges.push_back({detail::as_vertex(e[0], "edge endpoint"), detail::as_vertex(e[1], "edge endpoint"),
                         detail::as_unsigned(e[2], "edge color")});
  }
  return doc;
}

/// Parses and validates a graph document. Throws ParseError or InvariantError.
inline ColoredGraph load_graph(std::string_view text) {
  return ColoredGraph::from_document(parse_graph_document(text));
}

inline Json to_json(const ColoredGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v, e.color});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

inline std::string save_graph(const ColoredGraph& g) { return to_json(g).dump() + "\n"; }

inline LinearTripleSystem load_triples(std::string_view text) {
  const Json j = detail::parse_json(text);
  const std::size_t n = detail::as_unsigned(detail::field(j, "n"), "n");
  const Json& triples = detail::field(j, "triples");
  if (!triples.is_array()) throw ParseError("\"triples\" must be an array");
  std::vector<Triple> out;
  for (const Json& t : triples) {
    if (!t.is_array() || t.size() != 3) throw ParseError("each triple must be [a, b, c]");
    out.push_back({detail::as_vertex(t[0], "triple vertex"), detail::as_vertex(t[1], "triple vertex"),
                   detail::as_vertex(t[2], "triple vertex")});
  }
  return LinearTripleSystem(n, std::move(out));
}

inline Json to_json(const LinearTripleSystem& h) {
  Json triples = Json::array();
  for (const Triple& t : h.triples()) triples.push_back({t[0], t[1], t[2]});
  return Json{{"n", h.n()}, {"triples", std::move(triples)}};
}

inline std::string save_triples(const LinearTripleSystem& h) { return to_json(h).dump() + "\n"; }

inline BipartitionTag load_sides(std::string_view text) {
  const Json j = detail::parse_json(text);
  const Json& sides = detail::field(j, "sides");
  if (!sides.is_array()) throw ParseError("\"sides\" must be an array");
  BipartitionTag tag;
  for (const Json& s : sides) {
    const auto x = detail::as_unsigned(s, "side");
    if (x > 1) throw ParseError("side must be 0 (LEFT) or 1 (RIGHT)");
    tag.side.push_back(x == 0 ? Side::Left : Side::Right);
  }
  return tag;
}

inline Json to_json(const BipartitionTag& tag) {
  Json sides = Json::array();
  for (Side s : tag.side) sides.push_back(s == Side::Left ? 0 : 1);
  return Json{{"sides", std::move(sides)}};
}

inline Json to_json(const DegeneracyProfile& p) {
  return Json{{"k", p.k},
              {"hom_count", p.hom_count.str()},
              {"rainbow_count", p.rainbow_count.str()},
              {"degenerate_count", p.degenerate_count.str()},
              {"u_counts", detail::count_map(p.u_counts)},
              {"f_counts", detail::count_map(p.f_counts)},
              {"o_counts", detail::count_map(p.o_counts)},
              {"u_out_of_range", detail::count_map(p.u_out_of_range)},
              {"vertex_type_literal", detail::count_map(p.vertex_type_literal)},
              {"vertex_type_folded", detail::count_map(p.vertex_type_folded)},
              {"color_type_literal", detail::count_map(p.color_type_literal)},
              {"color_type_folded", detail::count_map(p.color_type_folded)},
              {"vertex_pairs", detail::count_matrix(p.vertex_pairs)},
              {"color_pairs", detail::count_matrix(p.color_pairs)}};
}

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const CheckRecord& c : r.checks) {
    Json context = Json::object();
    for (const auto& [key, value] : c.context) context[key] = value;
    checks.push_back(Json{{"name", c.name},
                          {"lhs", c.lhs},
                          {"relation", to_string(c.relation)},
                          {"rhs", c.rhs},
                          {"status", to_string(c.status)},
                          {"condition", c.condition},
                          {"context", std::move(context)}});
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

inline Json to_json(const CycleCertificate& c) {
  return Json{{"cycle", c.cycle}, {"colors", c.colors}};
}

inline CycleCertificate load_certificate(std::string_view text) {
  const Json j = detail::parse_json(text);
  CycleCertificate c;
  for (const Json& v : detail::field(j, "cycle")) c.cycle.push_back(detail::as_vertex(v, "cycle vertex"));
  if (j.contains("colors")) {
    for (const Json& x : j["colors"]) c.colors.push_back(detail::as_unsigned(x, "color"));
  }
  return c;
}

inline Json to_json(const LooseCycle& lc) {
  Json triples = Json::array();
  for (const Triple& t : lc.triples) triples.push_back({t[0], t[1], t[2]});
  return Json{{"triples", std::move(triples)}, {"links", lc.links}};
}

inline Json to_json(const ReductionTranscript& t) {
  Json attempts = Json::array();
  for (const auto& a : t.attempts) {
    Json rec{{"attempt", a.attempt}, {"transversal", a.transversal}, {"qualified", a.qualified},
             {"aux_edges", a.aux_edges}};
    rec["rotation"] = a.rotation ? Json(*a.rotation) : Json(nullptr);
    attempts.push_back(std::move(rec));
  }
  Json out{{"seed", t.seed}, {"retries", t.retries}, {"attempts", std::move(attempts)}};
  out["parts"] = t.parts;
  out["rainbow_cycle"] = t.rainbow_cycle ? to_json(*t.rainbow_cycle) : Json(nullptr);
  return out;
}

inline Json to_json(const SplitResult& r) {
  return Json{{"graph", to_json(r.graph)}, {"psi", r.psi}, {"delta", r.delta}};
}

inline Json to_json(const LopsidedResult& r) {
  Json classes = Json::object();
  for (const auto& [i, size] : r.class_sizes) classes[std::to_string(i)] = size;
  return Json{{"graph", to_json(r.subgraph)},
              {"k", r.k},
              {"n", r.n},
              {"average_degree", to_string(r.average_degree)},
              {"i", r.i},
              {"A", r.A},
              {"B", r.B},
              {"certificates",
               Json{{"X0", r.part_sizes[0]},
                    {"X1", r.part_sizes[1]},
                    {"Y0", r.part_sizes[2]},
                    {"Y1", r.part_sizes[3]},
                    {"quadrant_edges", r.quadrant_edges},
                    {"quadrant", to_string(r.quadrant)},
                    {"peeled_edges", r.peeled.edge_count()},
                    {"x_star", r.x_star},
                    {"y_star", r.y_star},
                    {"class_sizes", std::move(classes)}}}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

}  // namespace rainbow

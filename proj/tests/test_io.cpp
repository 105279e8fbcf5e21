#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rainbow/rainbow.hpp"

namespace rainbow {
namespace {

using namespace rainbow::testing;

TEST(LoadGraph, SingleEdge) {
  auto g = load_graph(R"({"n":2,"edges":[[0,1,0]]})");
  EXPECT_EQ(g, single_edge());
}

TEST(LoadGraph, DuplicateEdgeIsInvariantError) {
  try {
    load_graph(R"({"n":2,"edges":[[0,1,0],[0,1,1]]})");
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(LoadGraph, ImproperColoringIsInvariantError) {
  try {
    load_graph(R"({"n":3,"edges":[[0,1,5],[1,2,5]]})");
    FAIL();
  } catch (const InvariantError& e) {
    EXPECT_NE(std::string(e.what()).find("improper coloring at vertex 1"), std::string::npos);
  }
}

TEST(LoadGraph, MalformedDocumentsAreParseErrors) {
  for (const char* text : {"", "{", "[]", R"({"n":2})", R"({"edges":[]})", R"({"n":-1,"edges":[]})",
                           R"({"n":2,"edges":[[0,1]]})", R"({"n":2,"edges":[[0,"1",0]]})",
                           R"({"n":2,"edges":[[0,1,-3]]})", R"({"n":2,"edges":{}})"}) {
    EXPECT_THROW(load_graph(text), ParseError) << text;
  }
}

TEST(LoadGraph, OutOfRangeVertexRejected) {
  EXPECT_THROW(load_graph(R"({"n":2,"edges":[[0,2,0]]})"), InvariantError);
}

// Round trip plus mutation: every valid graph survives save/load, and any
// document that validate() flags is rejected by the loader.
TEST(LoadGraph, RoundTripAndMutationProperty) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = random_colored(8, 4 + seed % 20, seed);
    ASSERT_EQ(load_graph(save_graph(g)), g);

    auto doc = g.document();
    if (doc.edges.size() < 2) continue;
    const auto i = rng() % doc.edges.size(), j = rng() % doc.edges.size();
    switch (rng() % 3) {
      case 0: doc.edges[i].v = doc.edges[i].u; break;          // loop
      case 1: doc.edges.push_back(doc.edges[i]); break;         // duplicate
      default: doc.edges[i].color = doc.edges[j].color; break;  // possible clash
    }
    Json j_doc{{"n", doc.n}, {"edges", Json::array()}};
    for (const Edge& e : doc.edges) j_doc["edges"].push_back({e.u, e.v, e.color});
    const bool invalid = !validate(doc).empty();
    if (invalid) {
      EXPECT_THROW(load_graph(j_doc.dump()), InvariantError);
    } else {
      EXPECT_NO_THROW(load_graph(j_doc.dump()));
    }
  }
}

TEST(LoadTriples, RoundTripAndLinearity) {
  auto h = loose_triangle();
  EXPECT_EQ(load_triples(save_triples(h)), h);
  EXPECT_THROW(load_triples(R"({"n":4,"triples":[[0,1,2],[0,1,3]]})"), InvariantError);
  EXPECT_THROW(load_triples(R"({"n":4,"triples":[[0,1]]})"), ParseError);
}

TEST(LoadSides, ParsesZeroOne) {
  auto tag = load_sides(R"({"sides":[0,1,1]})");
  EXPECT_EQ(tag.side, (std::vector<Side>{Side::Left, Side::Right, Side::Right}));
  EXPECT_THROW(load_sides(R"({"sides":[2]})"), ParseError);
}

TEST(ProfileJson, BigIntegersAsDecimalStrings) {
  auto j = to_json(walk_census(k4(), 2));
  EXPECT_EQ(j["hom_count"], "84");
  EXPECT_EQ(j["u_counts"]["1"], "36");
  EXPECT_EQ(j["o_counts"]["2"], "36");
}

}  // namespace
}  // namespace rainbow

// Copyright 2026 The dbcayley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "dbcayley/bounds.hpp"
#include "dbcayley/cayley.hpp"
#include "support/oracle.hpp"

namespace dbcayley {
namespace {

std::string export_text(const GeneratorSet& set, ExportFormat format) {
  std::ostringstream out;
  export_graph(set, format, out);
  return out.str();
}

std::size_t line_count(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

TEST(Neighbors, OfIdentityAreTheGenerators) {
  const GeneratorSet s = block_directed_set(2, 2, 2, 1);
  EXPECT_EQ(neighbors(identity(s.params()), s), s.elements());
}

TEST(Neighbors, OutDegreeIsSetSize) {
  const GeneratorSet s = shift_directed_set(4, 3);
  for (std::uint64_t i = 0; i < 24; ++i) {
    const auto n = neighbors(decode(ElementIndex{i}, s.params()), s);
    EXPECT_EQ(n.size(), 3U);
    EXPECT_EQ(std::set<GroupElement>(n.begin(), n.end()).size(), 3U);
  }
}

TEST(Neighbors, UndirectedAdjacencyIsSymmetric) {
  const GeneratorSet s = block_undirected_set(2, 2, 2, 1);
  for (std::uint64_t i = 0; i < 24; ++i) {
    const GroupElement u = decode(ElementIndex{i}, s.params());
    for (const GroupElement& v : neighbors(u, s)) {
      const auto back = neighbors(v, s);
      EXPECT_NE(std::find(back.begin(), back.end(), u), back.end());
    }
  }
}

TEST(Neighbors, RejectsMixedGroups) {
  EXPECT_THROW(neighbors(identity(GroupParams(3, 3)), shift_directed_set(4, 3)), MismatchError);
}

TEST(Bfs, ShiftDirectedSmallest) {
  const BfsResult r = bfs_from_identity(shift_directed_set(4, 3));
  EXPECT_EQ(r.eccentricity(), 4);
  EXPECT_EQ(r.histogram, (std::vector<std::uint64_t>{1, 3, 5, 10, 5}));
  EXPECT_EQ(std::accumulate(r.histogram.begin(), r.histogram.end(), std::uint64_t{0}), 24U);
}

TEST(Bfs, VertexAtDistanceFourNeedsFourSteps) {
  // Enumerate every word of length <= 3 over the generators.
  const GeneratorSet s = shift_directed_set(4, 3);
  const GroupElement target(s.params(), {1, 1, 1}, 2);
  std::set<GroupElement> reach{identity(s.params())};
  for (int step = 0; step < 3; ++step) {
    std::set<GroupElement> grown = reach;
    for (const GroupElement& g : reach) {
      for (const GroupElement& x : s.elements()) grown.insert(g * x);
    }
    reach = std::move(grown);
  }
  EXPECT_FALSE(reach.contains(target));
  bool found = false;
  for (const GroupElement& g : reach) {
    for (const GroupElement& x : s.elements()) found = found || g * x == target;
  }
  EXPECT_TRUE(found);
}

TEST(Bfs, BlockDirectedHistograms) {
  EXPECT_EQ(bfs_from_identity(block_directed_set(2, 2, 2, 1)).histogram,
            (std::vector<std::uint64_t>{1, 7, 16}));
  EXPECT_EQ(bfs_from_identity(block_directed_set(3, 2, 2, 1)).histogram,
            (std::vector<std::uint64_t>{1, 11, 56, 92}));
  EXPECT_EQ(bfs_from_identity(block_undirected_set(2, 2, 2, 1)).histogram,
            (std::vector<std::uint64_t>{1, 11, 12}));
  EXPECT_EQ(bfs_from_identity(shift_undirected_set(4, 5)).histogram,
            (std::vector<std::uint64_t>{1, 4, 8, 9, 2}));
}

TEST(Bfs, CyclicSubgroupLeavesVerticesUnreachable) {
  const GroupParams p(2, 3);
  const GeneratorSet s(p, {GroupElement(p, {0, 0, 0}, 1)}, true, std::nullopt, 1);
  try {
    bfs_from_identity(s);
    FAIL();
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.result().reached, 3U);
    EXPECT_EQ(e.result().unreachable(), 21U);
    EXPECT_NE(std::string(e.what()).find("21"), std::string::npos);
  }
}

TEST(Bfs, RefusesAboveCap) {
  const GeneratorSet s = block_directed_set(3, 2, 2, 1);
  try {
    bfs_from_identity(s, {.cap = 100});
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.required(), 160);
    EXPECT_NE(std::string(e.what()).find("160"), std::string::npos);
  }
  EXPECT_NO_THROW(bfs_from_identity(s, {.cap = 160}));
}

TEST(Bfs, HistogramIndependentOfWorkerCount) {
  for (const ConstructionSpec& spec :
       {ConstructionSpec::shift_directed(4, 40), ConstructionSpec::shift_undirected(5, 20),
        ConstructionSpec::block_directed(2, 7, 2, 5)}) {
    const GeneratorSet s = build(spec);
    const BfsResult one = bfs_from_identity(s, {.workers = 1});
    for (unsigned w : {2U, 3U, 8U}) {
      EXPECT_EQ(bfs_from_identity(s, {.workers = w}).histogram, one.histogram) << spec.to_string();
    }
  }
}

TEST(Bfs, VertexTransitivitySpotCheck) {
  std::mt19937_64 rng(99);
  for (const ConstructionSpec& spec :
       {ConstructionSpec::shift_directed(4, 6), ConstructionSpec::shift_undirected(5, 9),
        ConstructionSpec::block_directed(3, 2, 3, 1), ConstructionSpec::block_undirected(3, 3, 2, 2)}) {
    const GeneratorSet s = build(spec);
    const std::uint64_t n = indexable_order(s.params());
    ASSERT_LE(n, 10'000U);
    const auto expected = bfs_from_identity(s).histogram;
    std::uniform_int_distribution<std::uint64_t> pick(0, n - 1);
    for (int i = 0; i < 10; ++i) {
      const GroupElement g = decode(ElementIndex{pick(rng)}, s.params());
      EXPECT_EQ(bfs_from(g, s).histogram, expected) << spec.to_string();
    }
  }
}

TEST(Bfs, MatchesNaiveAllPairsOnExportedGraphs) {
  std::vector<ConstructionSpec> specs = {
      ConstructionSpec::shift_directed(4, 3), ConstructionSpec::shift_undirected(4, 5),
      ConstructionSpec::block_directed(2, 2, 2, 1), ConstructionSpec::block_directed(3, 2, 2, 1),
      ConstructionSpec::block_undirected(2, 2, 2, 1), ConstructionSpec::block_undirected(2, 3, 2, 2),
      ConstructionSpec::shift_directed(5, 5), ConstructionSpec::shift_undirected(5, 8)};
  for (const ConstructionSpec& spec : specs) {
    const GeneratorSet s = build(spec);
    const auto n = static_cast<std::size_t>(indexable_order(s.params()));
    ASSERT_LE(n, 5000U);
    const auto graph = oracle::parse_edge_list(export_text(s, ExportFormat::kEdgeList), n, s.directed());
    EXPECT_EQ(oracle::all_pairs_diameter(graph), bfs_from_identity(s).eccentricity()) << spec.to_string();
    EXPECT_EQ(oracle::histogram_from(graph, 0), bfs_from_identity(s).histogram) << spec.to_string();
  }
}

TEST(Verify, ReportsForSmallInstances) {
  const GraphReport a = verify_construction(parse_spec("thm2:k=4,d=5"));
  EXPECT_EQ(a.order, 24);
  EXPECT_EQ(a.degree, 4U);
  EXPECT_EQ(a.diameter, 4);
  EXPECT_TRUE(a.ok());

  const GraphReport b = verify_construction(parse_spec("thm3:k=3,l=2,t=2,m=1"));
  EXPECT_EQ(b.order, 160);
  EXPECT_EQ(b.degree, 11U);
  EXPECT_EQ(b.diameter, 3);
  EXPECT_TRUE(b.ok());

  const GraphReport c = verify_construction(parse_spec("thm1:k=5,d=4"));
  EXPECT_EQ(c.order, 64);
  EXPECT_EQ(c.diameter, 5);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.moore_ratio, Rational(64, moore_bound(4, 5, true)));
}

TEST(Verify, HistogramInvariants) {
  for (const char* text : {"thm1:k=4,d=7", "thm2:k=5,d=9", "thm3:k=2,l=3,t=3,m=2", "thm4:k=3,l=2,t=3,m=1"}) {
    const GraphReport r = verify_construction(parse_spec(text));
    ASSERT_TRUE(r.diameter) << text;
    EXPECT_EQ(r.histogram.front(), 1U);
    EXPECT_EQ(r.histogram[1], r.degree);
    EXPECT_EQ(BigInt(std::accumulate(r.histogram.begin(), r.histogram.end(), std::uint64_t{0})), r.order);
    EXPECT_EQ(static_cast<int>(r.histogram.size()) - 1, *r.diameter);
    EXPECT_LE(*r.diameter, r.claimed_diameter);
    EXPECT_LE(r.order, moore_bound(static_cast<int>(r.degree), r.claimed_diameter, r.directed));
  }
}

TEST(Verify, OverlappingBlocksAreFlagged) {
  const GraphReport r = verify_construction(parse_spec("thm4:k=2,l=3,t=2,m=2"));
  EXPECT_EQ(r.diameter, 2);
  EXPECT_EQ(r.degree, 37U);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.discrepancies.empty());
}

TEST(Verify, RefusalAboveCap) {
  const GraphReport r = verify_construction(parse_spec("thm3:k=3,l=9,t=2,m=3"), {.cap = 1 << 20});
  EXPECT_TRUE(r.refusal);
  EXPECT_FALSE(r.diameter);
  EXPECT_EQ(r.refusal_states, 44'040'192);
  EXPECT_NE(r.refusal->find("44040192"), std::string::npos);
}

TEST(Export, EdgeListLineCounts) {
  const std::string directed = export_text(shift_directed_set(4, 3), ExportFormat::kEdgeList);
  EXPECT_EQ(line_count(directed), 72U);
  const std::string undirected = export_text(block_undirected_set(2, 2, 2, 1), ExportFormat::kEdgeList);
  EXPECT_EQ(line_count(undirected), 132U);
}

TEST(Export, EdgeListIsSortedAndUndirectedEdgesAppearOnce) {
  const GeneratorSet s = block_undirected_set(2, 2, 2, 1);
  std::istringstream in(export_text(s, ExportFormat::kEdgeList));
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  std::uint64_t last = 0;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  while (in >> u >> v) {
    EXPECT_LT(u, v);
    EXPECT_GE(u, last);
    last = u;
    EXPECT_TRUE(edges.insert({u, v}).second);
  }
  EXPECT_EQ(edges.size(), 132U);
}

TEST(Export, FirstLinesFollowGeneratorOrder) {
  const std::string text = export_text(shift_directed_set(4, 3), ExportFormat::kEdgeList);
  // Generators (0,0,0;1), (1,0,0;1), (0,0,0;2) from vertex 0 land on 8, 9, 16.
  EXPECT_EQ(text.substr(0, 15), "0 8\n0 9\n0 16\n1 ");
}

TEST(Export, EmptySetHasVerticesOnly) {
  const GroupParams p(2, 3);
  const GeneratorSet empty(p, {}, true, std::nullopt, 0);
  EXPECT_EQ(export_text(empty, ExportFormat::kEdgeList), "");
  EXPECT_EQ(line_count(export_text(empty, ExportFormat::kAdjacency)), 24U);
  const std::string dot = export_text(empty, ExportFormat::kDot);
  EXPECT_EQ(line_count(dot), 26U);
  EXPECT_EQ(dot.find("->"), std::string::npos);
}

TEST(Export, DotIsWellFormed) {
  for (const GeneratorSet& s : {shift_directed_set(4, 3), block_undirected_set(2, 2, 2, 1)}) {
    const std::string dot = export_text(s, ExportFormat::kDot);
    std::istringstream in(dot);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, s.directed() ? "digraph G {" : "graph G {");
    const std::regex vertex(R"(  \d+;)");
    const std::regex edge(s.directed() ? R"(  \d+ -> \d+;)" : R"(  \d+ -- \d+;)");
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool closed = false;
    while (std::getline(in, line)) {
      ASSERT_FALSE(closed);
      if (line == "}") {
        closed = true;
      } else if (std::regex_match(line, vertex)) {
        ++vertices;
      } else if (std::regex_match(line, edge)) {
        ++edges;
      } else {
        ADD_FAILURE() << "unexpected DOT line '" << line << "'";
      }
    }
    EXPECT_TRUE(closed);
    EXPECT_EQ(vertices, 24U);
    EXPECT_EQ(edges, s.directed() ? 72U : 132U);
  }
}

TEST(Export, AdjacencyListsNeighborsInGeneratorOrder) {
  const GeneratorSet s = shift_directed_set(4, 3);
  std::istringstream in(export_text(s, ExportFormat::kAdjacency));
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "0: 8 9 16");
}

TEST(Export, RoundTripPreservesHistogram) {
  for (const ConstructionSpec& spec :
       {ConstructionSpec::shift_directed(5, 7), ConstructionSpec::block_undirected(3, 2, 2, 1)}) {
    const GeneratorSet s = build(spec);
    const auto n = static_cast<std::size_t>(indexable_order(s.params()));
    const auto graph = oracle::parse_edge_list(export_text(s, ExportFormat::kEdgeList), n, s.directed());
    EXPECT_EQ(oracle::histogram_from(graph, 0), bfs_from_identity(s).histogram);
  }
}

TEST(Export, DeterministicAndCapped) {
  const GeneratorSet s = block_directed_set(3, 2, 2, 1);
  EXPECT_EQ(export_text(s, ExportFormat::kEdgeList), export_text(s, ExportFormat::kEdgeList));
  std::ostringstream sink;
  EXPECT_THROW(export_graph(s, ExportFormat::kDot, sink, 100), CapacityError);
  EXPECT_THROW(parse_export_format("gml"), ParameterError);
}

}  // namespace
}  // namespace dbcayley

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "menger/error.hpp"

namespace menger {
namespace {

using testing::Flag;
using testing::Par1;

TEST(CutBoundary, ParallelEdgesIntoSink) {
  Par1 p;
  const CutBoundary b = cut_boundary(p.graph, VertexSet{Par1::t});
  EXPECT_EQ(b.in, (EdgeSet{Par1::p1, Par1::p2}));
  EXPECT_TRUE(b.out.empty());
}

TEST(CutBoundary, FlagSinkOnly) {
  Flag f;
  const CutBoundary b = cut_boundary(f.graph, VertexSet{Flag::t});
  EXPECT_EQ(b.in, (EdgeSet{Flag::h1, Flag::h2, Flag::h3}));
  EXPECT_TRUE(b.out.empty());
}

TEST(CutBoundary, FlagEverythingButSource) {
  Flag f;
  const CutBoundary b = cut_boundary(f.graph, VertexSet{Flag::a, Flag::b, Flag::c, Flag::t});
  EXPECT_EQ(b.in, (EdgeSet{Flag::e1, Flag::e2}));
  EXPECT_TRUE(b.out.empty());
}

TEST(CutBoundary, RejectsInvalidCuts) {
  Flag f;
  EXPECT_THROW(cut_boundary(f.graph, VertexSet{Flag::s, Flag::t}), PreconditionError);
  EXPECT_THROW(cut_boundary(f.graph, VertexSet{Flag::a}), PreconditionError);
}

TEST(CutBoundary, EveryEdgeInExactlyOnePart) {
  Flag f;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    VertexSet x{Flag::t};
    for (VertexId v = 1; v <= 3; ++v) {
      if ((mask >> (v - 1)) & 1U) x.insert(v);
    }
    const CutBoundary b = cut_boundary(f.graph, x);
    for (std::size_t id : f.graph.edges()) {
      const Edge& e = f.graph.edge(static_cast<EdgeId>(id));
      const int parts = int(b.in.contains(id)) + int(b.out.contains(id)) +
                        int(x.contains(e.tail) && x.contains(e.head)) +
                        int(!x.contains(e.tail) && !x.contains(e.head));
      EXPECT_EQ(parts, 1);
    }
  }
}

TEST(Digraph, IncidenceListsAreSortedAndConsistent) {
  Flag f;
  EXPECT_EQ(f.graph.in_edge_set(Flag::t), (EdgeSet{Flag::h1, Flag::h2, Flag::h3}));
  EXPECT_EQ(f.graph.out_edge_set(Flag::b), (EdgeSet{Flag::e3, Flag::h2}));
  const auto out = f.graph.out_edges(Flag::b);
  EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
}

TEST(Digraph, RejectsBadConstruction) {
  EXPECT_THROW(Digraph(2, 0, 0, {}), PreconditionError);
  EXPECT_THROW(Digraph(2, 0, 2, {}), PreconditionError);
  EXPECT_THROW(Digraph(2, 0, 1, {{0, 0, 5}}), PreconditionError);
  EXPECT_THROW(Digraph(2, 0, 1, {{1, 0, 1}}), PreconditionError);
}

TEST(Digraph, WithoutEdgesKeepsIds) {
  Flag f;
  const Digraph g = f.graph.without_edges(EdgeSet{Flag::h2});
  EXPECT_FALSE(g.has_edge(Flag::h2));
  EXPECT_EQ(g.edge(Flag::h3).tail, Flag::c);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_EQ(g.in_edge_set(Flag::t), (EdgeSet{Flag::h1, Flag::h3}));
}

TEST(Paths, DefectsAreReported) {
  Flag f;
  EXPECT_EQ(path_defect(f.graph, Path{{Flag::e2, Flag::e3, Flag::h3}}), "");
  EXPECT_NE(path_defect(f.graph, Path{}), "");
  EXPECT_NE(path_defect(f.graph, Path{{Flag::e1, Flag::h3}}), "");
  const Digraph cyc(3, 0, 2, {{0, 0, 1}, {1, 1, 0}, {2, 0, 2}});
  EXPECT_NE(path_defect(cyc, Path{{0, 1, 2}}), "");
  EXPECT_EQ(path_vertices(f.graph, Path{{Flag::e2, Flag::h2}}),
            (std::vector<VertexId>{Flag::s, Flag::b, Flag::t}));
}

TEST(Paths, UnitedAndLastEdges) {
  const PathSystem ps{Path{{Flag::e1, Flag::h1}}, Path{{Flag::e2, Flag::e3, Flag::h3}}};
  EXPECT_EQ(united_edges(ps), (EdgeSet{0, 1, 2, 3, 5}));
  EXPECT_EQ(last_edges(ps), (EdgeSet{Flag::h1, Flag::h3}));
  EXPECT_TRUE(edge_disjoint(ps));
  EXPECT_FALSE(edge_disjoint({Path{{Flag::e2, Flag::h2}}, Path{{Flag::e2, Flag::e3}}}));
}

TEST(BuildPathsGreedy, FlagDecomposition) {
  Flag f;
  const auto r = build_paths_greedy(EdgeSet{Flag::e1, Flag::h1, Flag::e2, Flag::e3, Flag::h3},
                                    f.graph, Flag::s, Flag::t);
  EXPECT_EQ(r.paths, (PathSystem{Path{{Flag::e1, Flag::h1}},
                                 Path{{Flag::e2, Flag::e3, Flag::h3}}}));
  EXPECT_TRUE(r.unused.empty());
}

TEST(BuildPathsGreedy, SingleEdgeAndEmpty) {
  Par1 p;
  EXPECT_EQ(build_paths_greedy(EdgeSet{Par1::p1}, p.graph, Par1::s, Par1::t).paths,
            (PathSystem{Path{{Par1::p1}}}));
  EXPECT_TRUE(build_paths_greedy(EdgeSet{}, p.graph, Par1::s, Par1::t, 0).paths.empty());
}

TEST(BuildPathsGreedy, SmallestOutEdgeWinsAndCyclesAreCut) {
  // s=0 -> 1 -> 2 -> 1 cycle, 1 -> 3 = t.
  const Digraph d(4, 0, 3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 1, 3}});
  const auto r = build_paths_greedy(EdgeSet{0, 1, 2, 3}, d, 0, 3, 1);
  EXPECT_EQ(r.paths, (PathSystem{Path{{0, 3}}}));
  EXPECT_EQ(r.unused, (EdgeSet{1, 2}));
}

TEST(BuildPathsGreedy, StuckOrWrongCountIsMalformed) {
  Flag f;
  EXPECT_THROW(build_paths_greedy(EdgeSet{Flag::e1}, f.graph, Flag::s, Flag::t),
               MalformedAugmentation);
  EXPECT_THROW(build_paths_greedy(EdgeSet{Flag::e1, Flag::h1}, f.graph, Flag::s, Flag::t, 2),
               MalformedAugmentation);
}

TEST(ContractSystem, FlagWholeCutToSink) {
  Flag f;
  const auto c = contract_system(f.graph, VertexSet{Flag::a, Flag::b, Flag::c, Flag::t},
                                 VertexSet{Flag::t});
  const Digraph& g = c.graph;
  ASSERT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.source(), 0u);
  EXPECT_EQ(g.sink(), 4u);
  EXPECT_EQ(g.out_edge_set(g.source()), (EdgeSet{Flag::e1, Flag::e2}));
  EXPECT_EQ(g.in_edge_set(g.sink()), (EdgeSet{Flag::h1, Flag::h2, Flag::h3}));
  EXPECT_TRUE(g.has_edge(Flag::e3));
  EXPECT_EQ(c.original_vertex[1], Flag::a);
  EXPECT_EQ(c.original_vertex[3], Flag::c);
  EXPECT_EQ(c.original_vertex[0], ContractedDigraph::kMerged);
}

TEST(ContractSystem, ParallelPairAndDegenerateCase) {
  Par1 p;
  const auto c = contract_system(p.graph, VertexSet{Par1::t}, VertexSet{Par1::t});
  EXPECT_EQ(c.graph.vertex_count(), 2u);
  EXPECT_EQ(c.graph.in_edge_set(c.graph.sink()), (EdgeSet{Par1::p1, Par1::p2}));

  Flag f;
  const auto d = contract_system(f.graph, VertexSet{Flag::t}, VertexSet{Flag::t});
  EXPECT_EQ(d.graph.vertex_count(), 2u);
  EXPECT_EQ(d.graph.edges(), (EdgeSet{Flag::h1, Flag::h2, Flag::h3}));
}

TEST(ContractSystem, DropsInteriorEdgesAndRejectsNonNested) {
  Flag f;
  const auto c = contract_system(f.graph, VertexSet{Flag::c, Flag::t}, VertexSet{Flag::t});
  EXPECT_FALSE(c.graph.has_edge(Flag::e1));
  EXPECT_FALSE(c.graph.has_edge(Flag::e2));
  EXPECT_EQ(c.graph.edges(), (EdgeSet{Flag::e3, Flag::h1, Flag::h2, Flag::h3}));
  for (std::size_t id : c.graph.edges()) {
    EXPECT_FALSE(c.graph.edge(static_cast<EdgeId>(id)).is_loop());
  }
  EXPECT_THROW(contract_system(f.graph, VertexSet{Flag::c, Flag::t},
                               VertexSet{Flag::a, Flag::t}),
               PreconditionError);
}

TEST(DeleteSpanned, FlagParallelPair) {
  Flag f;
  const Digraph g = delete_spanned(f.graph, *f.matroid, EdgeSet{Flag::h1});
  EXPECT_FALSE(g.has_edge(Flag::h1));
  EXPECT_FALSE(g.has_edge(Flag::h2));
  EXPECT_TRUE(g.has_edge(Flag::h3));
}

TEST(DeleteSpanned, EmptySetIsIdentityAndRankOneSaturates) {
  Flag f;
  EXPECT_EQ(delete_spanned(f.graph, *f.matroid, EdgeSet{}).edges(), f.graph.edges());
  Par1 p;
  const Digraph g = delete_spanned(p.graph, *p.matroid, EdgeSet{Par1::p1});
  EXPECT_TRUE(g.edges().empty());
}

TEST(DeleteSpanned, RejectsDependentSet) {
  Flag f;
  EXPECT_THROW(delete_spanned(f.graph, *f.matroid, EdgeSet{Flag::h1, Flag::h2}),
               PreconditionError);
}

TEST(Reachability, IgnoresLoops) {
  const Digraph d(3, 0, 2, {{0, 0, 0}, {1, 0, 1}});
  EXPECT_EQ(reachable_from(d, 0), (VertexSet{0, 1}));
}

}  // namespace
}  // namespace menger

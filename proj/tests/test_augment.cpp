#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "menger/augment.hpp"
#include "menger/error.hpp"
#include "menger/instance_io.hpp"

namespace menger {
namespace {

using testing::Flag;
using testing::Par1;

SignedStep fwd(EdgeId e) { return {e, Direction::kForward}; }
SignedStep rev(EdgeId e) { return {e, Direction::kReverse}; }

TEST(CheckWalk, FinalDependenceIsConditionThree) {
  Flag f;
  const PathSystem p{Path{{Flag::e2, Flag::h2}}};
  const WalkCheck r =
      check_augmenting_walk(f.graph, *f.matroid, p, AugmentingWalk{{fwd(Flag::e1), fwd(Flag::h1)}});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violated_condition, 3);
}

TEST(CheckWalk, FlagLongWalkIsValid) {
  Flag f;
  const PathSystem p{Path{{Flag::e2, Flag::h2}}};
  const AugmentingWalk w{
      {fwd(Flag::e1), fwd(Flag::h1), rev(Flag::h2), fwd(Flag::e3), fwd(Flag::h3)}};
  const WalkCheck r = check_augmenting_walk(f.graph, *f.matroid, p, w);
  EXPECT_TRUE(r.valid) << r.message;
  EXPECT_EQ(r.vertices, (std::vector<VertexId>{Flag::s, Flag::a, Flag::t, Flag::b, Flag::c,
                                               Flag::t}));
  ASSERT_EQ(r.repairs.size(), 1u);
  EXPECT_EQ(r.repairs[0].forward_step, 1u);
  EXPECT_EQ(r.repairs[0].vertex, Flag::t);
  EXPECT_EQ(r.repairs[0].removed, Flag::h2);
  EXPECT_EQ(r.repairs[0].circuit, (EdgeSet{Flag::h1, Flag::h2}));
  EXPECT_EQ((w.edge_set() ^ united_edges(p)),
            (EdgeSet{Flag::e1, Flag::h1, Flag::e3, Flag::h3, Flag::e2}));
}

TEST(CheckWalk, OneStepWalk) {
  Par1 p;
  EXPECT_TRUE(check_augmenting_walk(p.graph, *p.matroid, {}, AugmentingWalk{{fwd(Par1::p2)}}).valid);
}

TEST(CheckWalk, ViolationKinds) {
  Flag f;
  const PathSystem p{Path{{Flag::e2, Flag::h2}}};
  auto cond = [&](const AugmentingWalk& w) {
    return check_augmenting_walk(f.graph, *f.matroid, p, w).violated_condition;
  };
  EXPECT_EQ(cond({{rev(Flag::e1)}}), 1);               // e1 is not a path edge
  EXPECT_EQ(cond({{fwd(Flag::e2)}}), 1);               // e2 is a path edge
  EXPECT_EQ(cond({{fwd(Flag::e1), fwd(Flag::e3)}}), 1); // does not chain
  // Repair step that would return to s.
  EXPECT_EQ(cond({{fwd(Flag::e1), fwd(Flag::h1), rev(Flag::h2), rev(Flag::e2)}}), 2);
  // Dependence at t not repaired by the next step.
  const Digraph g(5, Flag::s, Flag::t,
                  {{0, 0, 1}, {1, 0, 2}, {2, 2, 3}, {3, 1, 4}, {4, 2, 4}, {5, 3, 4}, {6, 4, 3}});
  Flag h(g);
  EXPECT_EQ(check_augmenting_walk(h.graph, *h.matroid, p,
                                  AugmentingWalk{{fwd(Flag::e1), fwd(Flag::h1), fwd(6)}})
                .violated_condition,
            4);
}

TEST(CheckWalk, EdgeReuseIsConditionFive) {
  // s -> a, a <-> b cycle, b -> t.
  const Digraph d(4, 0, 3, {{0, 0, 1}, {1, 1, 2}, {2, 2, 1}, {3, 2, 3}});
  const auto m = testing::all_free(d);
  const WalkCheck r = check_augmenting_walk(
      d, *m, {}, AugmentingWalk{{fwd(0), fwd(1), fwd(2), fwd(1), fwd(3)}});
  EXPECT_EQ(r.violated_condition, 5);
}

TEST(ShortestWalk, FlagFromSinglePath) {
  Flag f;
  const auto w = find_shortest_augmenting_walk(f.graph, *f.matroid,
                                               {Path{{Flag::e2, Flag::h2}}}, Flag::t);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (AugmentingWalk{{fwd(Flag::e1), fwd(Flag::h1), rev(Flag::h2), fwd(Flag::e3),
                                 fwd(Flag::h3)}}));
  EXPECT_EQ(w->length(), 5u);
}

TEST(ShortestWalk, NoneWhenSourceIsSaturated) {
  Flag f;
  EXPECT_FALSE(find_shortest_augmenting_walk(
                   f.graph, *f.matroid,
                   {Path{{Flag::e1, Flag::h1}}, Path{{Flag::e2, Flag::e3, Flag::h3}}}, Flag::t)
                   .has_value());
}

TEST(ShortestWalk, SmallestIdTieBreak) {
  Par1 p;
  const auto w = find_shortest_augmenting_walk(p.graph, *p.matroid, {}, Par1::t);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, AugmentingWalk{{fwd(Par1::p1)}});
}

TEST(ShortestWalk, RejectsDependentSystem) {
  Par1 p;
  EXPECT_THROW(find_shortest_augmenting_walk(p.graph, *p.matroid,
                                             {Path{{Par1::p1}}, Path{{Par1::p2}}}, Par1::t),
               PreconditionError);
}

TEST(Reachable, Examples) {
  Flag f;
  EXPECT_EQ(reachable_endpoints(f.graph, *f.matroid,
                                {Path{{Flag::e1, Flag::h1}}, Path{{Flag::e2, Flag::e3, Flag::h3}}}),
            (VertexSet{Flag::s}));
  EXPECT_EQ(reachable_endpoints(f.graph, *f.matroid, {}), f.graph.all_vertices());
  Par1 p;
  EXPECT_EQ(reachable_endpoints(p.graph, *p.matroid, {Path{{Par1::p1}}}), (VertexSet{Par1::s}));
}

TEST(Apply, FlagLongWalk) {
  Flag f;
  const PathSystem p{Path{{Flag::e2, Flag::h2}}};
  const AugmentingWalk w{
      {fwd(Flag::e1), fwd(Flag::h1), rev(Flag::h2), fwd(Flag::e3), fwd(Flag::h3)}};
  const PathSystem next = apply_augmentation(f.graph, *f.matroid, p, w);
  EXPECT_EQ(next, (PathSystem{Path{{Flag::e1, Flag::h1}}, Path{{Flag::e2, Flag::e3, Flag::h3}}}));
  EXPECT_EQ(span(*f.matroid, last_edges(p)), (EdgeSet{Flag::h1, Flag::h2}));
  EXPECT_EQ(span(*f.matroid, last_edges(next)) & f.graph.in_edge_set(Flag::t),
            (EdgeSet{Flag::h1, Flag::h2, Flag::h3}));
}

TEST(Apply, DisjointWalks) {
  Par1 p;
  EXPECT_EQ(apply_augmentation(p.graph, *p.matroid, {}, AugmentingWalk{{fwd(Par1::p1)}}),
            (PathSystem{Path{{Par1::p1}}}));
  Flag f;
  EXPECT_EQ(apply_augmentation(f.graph, *f.matroid, {},
                               AugmentingWalk{{fwd(Flag::e2), fwd(Flag::h2)}}),
            (PathSystem{Path{{Flag::e2, Flag::h2}}}));
}

TEST(Apply, InvalidWalkIsRejected) {
  Flag f;
  EXPECT_ANY_THROW(apply_augmentation(f.graph, *f.matroid, {Path{{Flag::e2, Flag::h2}}},
                                      AugmentingWalk{{fwd(Flag::e1), fwd(Flag::h1)}}));
}

// Every walk with each edge used at most once, up to `max_len` steps.
void enumerate_walks(const Digraph& d, const PathSystem& p, std::size_t max_len,
                     const std::function<void(const AugmentingWalk&)>& visit) {
  const EdgeSet flow = united_edges(p);
  AugmentingWalk w;
  EdgeSet used;
  std::function<void(VertexId)> rec = [&](VertexId at) {
    if (!w.steps.empty()) visit(w);
    if (w.length() == max_len) return;
    for (std::size_t id : d.edges()) {
      if (used.contains(id)) continue;
      const Edge& e = d.edge(static_cast<EdgeId>(id));
      const bool is_flow = flow.contains(id);
      const VertexId from = is_flow ? e.head : e.tail;
      const VertexId to = is_flow ? e.tail : e.head;
      if (from != at) continue;
      w.steps.push_back({e.id, is_flow ? Direction::kReverse : Direction::kForward});
      used.insert(id);
      rec(to);
      used.erase(id);
      w.steps.pop_back();
    }
  };
  rec(d.source());
}

TEST(ShortestWalk, NoShorterValidWalkOnRandomInstances) {
  std::size_t found = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    io::GenOptions opt{seed, 4 + seed % 3, 5 + seed % 5, {"free", "uniform", "partition", "gf2"}};
    const io::Instance inst = io::build_instance(io::generate_instance(opt));
    const Digraph& d = inst.graph;
    if (d.edge_count() > 10) continue;
    PathSystem p;
    while (true) {
      const auto w = find_shortest_augmenting_walk(d, *inst.matroid, p, d.sink());
      std::size_t best = static_cast<std::size_t>(-1);
      AugmentingWalk best_walk;
      enumerate_walks(d, p, w ? w->length() : d.edge_count(), [&](const AugmentingWalk& cand) {
        const WalkCheck c = check_augmenting_walk(d, *inst.matroid, p, cand);
        if (!c.valid || c.vertices.back() != d.sink()) return;
        if (cand.length() < best ||
            (cand.length() == best &&
             std::lexicographical_compare(
                 cand.steps.begin(), cand.steps.end(), best_walk.steps.begin(),
                 best_walk.steps.end(), [](const SignedStep& x, const SignedStep& y) {
                   return x.edge < y.edge;
                 }))) {
          best = cand.length();
          best_walk = cand;
        }
      });
      if (!w) {
        ASSERT_EQ(best, static_cast<std::size_t>(-1)) << "seed " << seed;
        break;
      }
      ++found;
      ASSERT_TRUE(check_augmenting_walk(d, *inst.matroid, p, *w).valid);
      ASSERT_EQ(best, w->length()) << "seed " << seed;
      ASSERT_EQ(best_walk, *w) << "seed " << seed;
      const std::size_t before = rank(*inst.matroid, last_edges(p));
      p = apply_augmentation(d, *inst.matroid, p, *w);
      ASSERT_GT(rank(*inst.matroid, last_edges(p)), before);
    }
  }
  EXPECT_GT(found, 50u);
}

TEST(Reachable, MatchesWalkEnumeration) {
  for (std::uint64_t seed = 200; seed < 280; ++seed) {
    io::GenOptions opt{seed, 4 + seed % 3, 5 + seed % 4, {"free", "uniform", "gf2"}};
    const io::Instance inst = io::build_instance(io::generate_instance(opt));
    const Digraph& d = inst.graph;
    PathSystem p;
    if (auto w = find_shortest_augmenting_walk(d, *inst.matroid, p, d.sink())) {
      p = apply_augmentation(d, *inst.matroid, p, *w);
    }
    VertexSet ends{d.source()};
    enumerate_walks(d, p, d.edge_count(), [&](const AugmentingWalk& cand) {
      const WalkCheck c = check_augmenting_walk(d, *inst.matroid, p, cand);
      if (c.valid) ends.insert(c.vertices.back());
    });
    ASSERT_EQ(reachable_endpoints(d, *inst.matroid, p), ends) << "seed " << seed;
  }
}

}  // namespace
}  // namespace menger

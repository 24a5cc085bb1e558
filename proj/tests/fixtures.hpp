#pragma once

#include <map>
#include <memory>

#include "menger/digraph.hpp"
#include "menger/matroid.hpp"

namespace menger::testing {

// s -> a -> t, s -> b -> t, s -> b -> c -> t with a GF(2) matroid at t under
// which h1 and h2 are parallel.
struct Flag {
  enum : EdgeId { e1, e2, e3, h1, h2, h3 };
  static constexpr VertexId s = 0, a = 1, b = 2, c = 3, t = 4;

  Digraph graph;
  MatroidPtr sink_block;
  std::shared_ptr<const DirectSumMatroid> matroid;

  Flag() : Flag(Digraph(5, s, t,
                        {{e1, s, a}, {e2, s, b}, {e3, b, c}, {h1, a, t}, {h2, b, t},
                         {h3, c, t}})) {}

  explicit Flag(Digraph g) : graph(std::move(g)) {
    sink_block = std::make_shared<LinearGF2Matroid>(
        std::map<EdgeId, std::uint64_t>{{h1, 0b01}, {h2, 0b01}, {h3, 0b10}});
    matroid = DirectSumMatroid::over_in_edges(graph, {{t, sink_block}});
  }
};

// Two parallel s -> t edges under a rank-one uniform matroid at t.
struct Par1 {
  enum : EdgeId { p1, p2 };
  static constexpr VertexId s = 0, t = 1;

  Digraph graph{2, s, t, {{p1, s, t}, {p2, s, t}}};
  MatroidPtr sink_block = std::make_shared<UniformMatroid>(EdgeSet{p1, p2}, 1);
  std::shared_ptr<const DirectSumMatroid> matroid =
      DirectSumMatroid::over_in_edges(graph, {{t, sink_block}});
};

inline std::shared_ptr<const DirectSumMatroid> all_free(const Digraph& d) {
  return DirectSumMatroid::over_in_edges(d, {});
}

}  // namespace menger::testing

#include "menger/augment.hpp"

#include <algorithm>
#include <unordered_set>

#include "menger/error.hpp"

namespace menger {

EdgeSet AugmentingWalk::edge_set() const {
  EdgeSet out;
  for (const SignedStep& s : steps) out.insert(s.edge);
  return out;
}

void require_independent_st_system(const Digraph& d, const Matroid& m,
                                   const PathSystem& p) {
  for (const Path& path : p) {
    if (std::string defect = path_defect(d, path); !defect.empty()) {
      throw PreconditionError("path system: " + defect);
    }
    if (path_start(d, path) != d.source() || path_end(d, path) != d.sink()) {
      throw PreconditionError("path system: a path is not s->t");
    }
  }
  if (!edge_disjoint(p)) {
    throw PreconditionError("path system is not edge-disjoint");
  }
  if (!m.is_independent(united_edges(p))) {
    throw PreconditionError("path system is dependent");
  }
}

WalkCheck check_augmenting_walk(const Digraph& d, const Matroid& m,
                                const PathSystem& p, const AugmentingWalk& w) {
  require_independent_st_system(d, m, p);
  const EdgeSet flow = united_edges(p);
  WalkCheck out;
  out.vertices.push_back(d.source());
  auto fail = [&](int condition, std::size_t step, std::string message) {
    out.valid = false;
    out.violated_condition = condition;
    out.step = step;
    out.message = std::move(message);
    return out;
  };

  EdgeSet used;
  EdgeSet current = flow;
  bool dependent = false;
  VertexId at = d.source();
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const SignedStep& st = w.steps[i];
    if (!d.has_edge(st.edge)) {
      return fail(1, i, "edge " + std::to_string(st.edge) + " is not in the digraph");
    }
    if (used.contains(st.edge)) {
      return fail(5, i, "edge " + std::to_string(st.edge) + " used twice");
    }
    const Edge& e = d.edge(st.edge);
    VertexId next = 0;
    if (st.direction == Direction::kForward) {
      if (flow.contains(st.edge)) {
        return fail(1, i, "forward step on path edge " + std::to_string(st.edge));
      }
      if (e.tail != at) return fail(1, i, "forward step does not start at the walk's end");
      next = e.head;
    } else {
      if (!flow.contains(st.edge)) {
        return fail(1, i, "reverse step on non-path edge " + std::to_string(st.edge));
      }
      if (e.head != at) return fail(1, i, "reverse step does not start at the walk's end");
      next = e.tail;
    }
    if (next == d.source()) return fail(2, i, "walk returns to s");

    const EdgeSet before = current;
    current.toggle(st.edge);
    used.insert(st.edge);
    const bool now_dependent = !m.is_independent(current);
    if (dependent && now_dependent) {
      return fail(4, i, "dependence left unrepaired after step " + std::to_string(i));
    }
    if (dependent) {
      // The previous step was a forward step whose circuit this step breaks.
      Repair& r = out.repairs.back();
      if (st.direction != Direction::kReverse || !r.circuit.contains(st.edge) ||
          d.edge(st.edge).head != r.vertex) {
        throw InternalInvariantError(
            "repair of a dependence is not a reverse step on its circuit");
      }
      r.removed = st.edge;
    }
    if (now_dependent) {
      if (st.direction != Direction::kForward) {
        throw InternalInvariantError("a reverse step created a dependence");
      }
      out.repairs.push_back(
          Repair{i, e.head, fundamental_circuit(m, before, st.edge), 0});
    }
    dependent = now_dependent;
    at = next;
    out.vertices.push_back(at);
  }
  if (dependent) {
    return fail(3, w.steps.empty() ? 0 : w.steps.size() - 1,
                "final symmetric difference is dependent");
  }
  out.valid = true;
  return out;
}

namespace {

struct SearchNode {
  VertexId vertex;
  EdgeSet toggled;
  bool dependent;
  long parent;
  SignedStep step;
};

struct StateKey {
  VertexId vertex;
  EdgeSet toggled;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    return k.toggled.hash() * 31U + k.vertex;
  }
};

/// Breadth-first exploration of augmenting walks. Calls `on_valid(node)` for
/// every newly discovered state whose symmetric difference is independent;
/// stops early when it returns true.
template <typename OnValid>
const std::vector<SearchNode>& explore(const Digraph& d, const Matroid& m,
                                       const PathSystem& p, OnValid on_valid,
                                       std::vector<SearchNode>& nodes,
                                       long& hit) {
  require_independent_st_system(d, m, p);
  const EdgeSet flow = united_edges(p);
  const VertexId s = d.source();
  std::unordered_set<StateKey, StateKeyHash> seen;
  nodes.push_back(SearchNode{s, {}, false, -1, {}});
  seen.insert(StateKey{s, {}});
  hit = -1;
  if (on_valid(nodes.front())) {
    hit = 0;
    return nodes;
  }

  std::vector<SignedStep> moves;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const VertexId at = nodes[head].vertex;
    moves.clear();
    for (EdgeId id : d.out_edges(at)) {
      const Edge& e = d.edge(id);
      if (!e.is_loop() && e.head != s && !flow.contains(id)) {
        moves.push_back({id, Direction::kForward});
      }
    }
    for (EdgeId id : d.in_edges(at)) {
      const Edge& e = d.edge(id);
      if (!e.is_loop() && e.tail != s && flow.contains(id)) {
        moves.push_back({id, Direction::kReverse});
      }
    }
    std::sort(moves.begin(), moves.end(), [](const SignedStep& a, const SignedStep& b) {
      if (a.edge != b.edge) return a.edge < b.edge;
      return a.direction == Direction::kForward && b.direction == Direction::kReverse;
    });

    for (const SignedStep& mv : moves) {
      const SearchNode& cur = nodes[head];
      if (cur.toggled.contains(mv.edge)) continue;
      const Edge& e = d.edge(mv.edge);
      const VertexId next = mv.direction == Direction::kForward ? e.head : e.tail;
      EdgeSet toggled = cur.toggled.with(mv.edge);
      const bool dependent = !m.is_independent(flow ^ toggled);
      if (cur.dependent && dependent) continue;
      if (!seen.insert(StateKey{next, toggled}).second) continue;
      nodes.push_back(SearchNode{next, std::move(toggled), dependent,
                                 static_cast<long>(head), mv});
      if (!dependent && on_valid(nodes.back())) {
        hit = static_cast<long>(nodes.size()) - 1;
        return nodes;
      }
    }
  }
  return nodes;
}

AugmentingWalk unwind(const std::vector<SearchNode>& nodes, long index) {
  AugmentingWalk w;
  for (long i = index; nodes[i].parent >= 0; i = nodes[i].parent) {
    w.steps.push_back(nodes[i].step);
  }
  std::reverse(w.steps.begin(), w.steps.end());
  return w;
}

}  // namespace

std::optional<AugmentingWalk> find_shortest_augmenting_walk(
    const Digraph& d, const Matroid& m, const PathSystem& p, VertexId target) {
  std::vector<SearchNode> nodes;
  long hit = -1;
  explore(d, m, p, [&](const SearchNode& n) { return n.vertex == target; },
          nodes, hit);
  if (hit < 0) return std::nullopt;
  return unwind(nodes, hit);
}

VertexSet reachable_endpoints(const Digraph& d, const Matroid& m,
                              const PathSystem& p) {
  std::vector<SearchNode> nodes;
  long hit = -1;
  VertexSet y;
  explore(d, m, p,
          [&](const SearchNode& n) {
            y.insert(n.vertex);
            return false;
          },
          nodes, hit);
  return y;
}

PathSystem apply_augmentation(const Digraph& d, const Matroid& m,
                              const PathSystem& p, const AugmentingWalk& w) {
  const WalkCheck check = check_augmenting_walk(d, m, p, w);
  if (!check.valid) {
    throw PreconditionError("apply_augmentation: not an augmenting walk: " +
                            check.message);
  }
  if (check.vertices.back() != d.sink()) {
    throw PreconditionError("apply_augmentation: walk does not end at t");
  }

  const EdgeSet walk_edges = w.edge_set();
  PathSystem result;
  EdgeSet touched_edges;
  std::size_t touched = 0;
  for (const Path& path : p) {
    const EdgeSet pe = path.edge_set();
    if (pe.intersects(walk_edges)) {
      touched_edges |= pe;
      ++touched;
    } else {
      result.push_back(path);
    }
  }
  GreedyDecomposition rebuilt;
  try {
    rebuilt = build_paths_greedy(walk_edges ^ touched_edges, d, d.source(),
                                 d.sink(), static_cast<long>(touched + 1));
  } catch (const MalformedAugmentation& e) {
    throw InternalInvariantError(std::string("augmentation rebuild failed: ") +
                                 e.what());
  }
  for (Path& path : rebuilt.paths) result.push_back(std::move(path));

  if (!edge_disjoint(result) || !m.is_independent(united_edges(result))) {
    throw InternalInvariantError("augmented path system is not independent");
  }
  const EdgeSet old_span = span(m, last_edges(p));
  const EdgeSet new_span = span(m, last_edges(result));
  if (!old_span.is_subset_of(new_span) || old_span == new_span) {
    throw InternalInvariantError("augmentation did not strictly grow the span at t");
  }
  return result;
}

}  // namespace menger

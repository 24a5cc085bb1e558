#pragma once

#include <optional>
#include <string>
#include <vector>

#include "menger/digraph.hpp"
#include "menger/matroid.hpp"

namespace menger {

enum class Direction { kForward, kReverse };

/// One step of an augmenting walk. Forward steps traverse a non-path edge
/// tail->head; reverse steps traverse a path edge head->tail.
struct SignedStep {
  EdgeId edge = 0;
  Direction direction = Direction::kForward;

  friend bool operator==(const SignedStep&, const SignedStep&) = default;
};

struct AugmentingWalk {
  std::vector<SignedStep> steps;

  std::size_t length() const { return steps.size(); }
  EdgeSet edge_set() const;
  friend bool operator==(const AugmentingWalk&, const AugmentingWalk&) = default;
};

/// A dependence created by a forward step and the reverse step that removed it.
struct Repair {
  std::size_t forward_step = 0;
  VertexId vertex = 0;
  EdgeSet circuit;
  EdgeId removed = 0;
};

struct WalkCheck {
  bool valid = false;
  /// 0 when valid. 1: orientation/chaining; 2: leaves s or returns to it;
  /// 3: final set dependent; 4: dependence not repaired by the next step;
  /// 5: an edge is used twice.
  int violated_condition = 0;
  std::size_t step = 0;
  std::string message;
  /// Vertex after each prefix; vertices[0] is s.
  std::vector<VertexId> vertices;
  std::vector<Repair> repairs;
};

/// Replays `w` against the path system `p` and reports the earliest
/// violation. `p` must be an independent, edge-disjoint s->t system.
WalkCheck check_augmenting_walk(const Digraph& d, const Matroid& m,
                                const PathSystem& p, const AugmentingWalk& w);

/// Minimum-length augmenting walk ending at `target`, ties broken by the
/// lexicographically smallest edge-id sequence. Breadth-first over states
/// (vertex, toggled edges); exact but exponential in the worst case.
std::optional<AugmentingWalk> find_shortest_augmenting_walk(
    const Digraph& d, const Matroid& m, const PathSystem& p, VertexId target);

/// Final vertices of all augmenting walks; always contains s.
VertexSet reachable_endpoints(const Digraph& d, const Matroid& m,
                              const PathSystem& p);

/// Replaces the k paths touched by `w` (which must end at t) with k+1 paths
/// decomposed greedily from A(W) xor A(touched). Checks independence and
/// strict growth of span(A_last) at t; failures throw InternalInvariantError.
PathSystem apply_augmentation(const Digraph& d, const Matroid& m,
                              const PathSystem& p, const AugmentingWalk& w);

/// Throws PreconditionError unless `p` is an independent system of
/// edge-disjoint s->t paths of `d`.
void require_independent_st_system(const Digraph& d, const Matroid& m,
                                   const PathSystem& p);

}  // namespace menger

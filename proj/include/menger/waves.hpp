#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "menger/digraph.hpp"
#include "menger/matroid.hpp"
#include "menger/solver.hpp"

namespace menger {

/// The instance D(A0): the base digraph minus span(A0), with the base
/// matroid contracted by span(A0). A0 must be independent in the base.
/// Contracting further composes: D(A0)(A1) is D(A0 + A1).
class ContractedSystem {
 public:
  ContractedSystem(Digraph base_graph, MatroidPtr base_matroid);

  ContractedSystem contracted(const EdgeSet& more) const;

  const Digraph& graph() const { return graph_; }
  const Matroid& matroid() const { return *matroid_; }
  const MatroidPtr& matroid_ptr() const { return matroid_; }
  const EdgeSet& contracted_edges() const { return a0_; }
  const Digraph& base_graph() const { return *base_graph_; }
  const Matroid& base_matroid() const { return *base_matroid_; }

 private:
  ContractedSystem(std::shared_ptr<const Digraph> base_graph,
                   MatroidPtr base_matroid, EdgeSet a0);

  std::shared_ptr<const Digraph> base_graph_;
  MatroidPtr base_matroid_;
  EdgeSet a0_;
  Digraph graph_;
  MatroidPtr matroid_;
};

/// s->X paths together with the cut X. Paths are kept sorted so that equal
/// waves compare equal.
struct Wave {
  PathSystem paths;
  VertexSet cut;

  friend bool operator==(const Wave&, const Wave&) = default;
};

Wave make_wave(PathSystem paths, VertexSet cut);

struct WaveCheck {
  bool ok = true;
  std::string reason;
};

/// X is a t-s cut; each path starts at s and meets X only at its end; the
/// paths are edge-disjoint with independent union; A_last spans in(X).
WaveCheck check_wave(const ContractedSystem& sys, const Wave& w);

/// Greedy base of out(s) as single-edge paths, with X = V \ {s}.
Wave trivial_wave(const ContractedSystem& sys);

struct WaveOrder {
  bool extends = false;  ///< w0 <= w1
  bool complete = false; ///< every path of w0 is continued in w1
  bool proper = false;   ///< X1 strictly inside X0
  std::string reason;    ///< why `extends` is false
};

/// Evaluates w0 <= w1: X1 inside X0; each w1 path forward-continues a w0
/// path inside X0; each w0 path meeting X1 belongs to w1.
WaveOrder compare_waves(const ContractedSystem& sys, const Wave& w0,
                        const Wave& w1);

/// Keeps the w paths ending in Y and adds the q paths whose last edge
/// enters the greedy base B of in(Y), A_last(w_Y) <= B <= A_last(w_Y) +
/// A_last(q). Requires Y inside X and q made of continuations of w paths.
Wave merge_waves(const ContractedSystem& sys, const Wave& w, const Wave& q);

/// Cuts each path at its first vertex in Z. Requires the complementarity
/// conditions between `paths` and Z.
Wave truncate_to_cut(const ContractedSystem& sys, const PathSystem& paths,
                     const VertexSet& z);

/// A wave strictly above `w`, or nullopt when `w` is maximal. Candidate cuts
/// Y are scanned by size, then encoding; the first one that admits a
/// spanning continuation system wins.
std::optional<Wave> find_proper_extension(const ContractedSystem& sys,
                                          const Wave& w);

/// Fixpoint of find_proper_extension starting from `start`.
Wave maximal_wave(const ContractedSystem& sys, const Wave& start);

/// Largest element of a finite chain; throws PreconditionError when the
/// waves are not linearly ordered.
Wave chain_sup(const ContractedSystem& sys, std::span<const Wave> chain);

/// Marker for reach_sink_path(v = t): the empty path is not representable.
struct AlreadyAtSink {
  friend bool operator==(const AlreadyAtSink&, const AlreadyAtSink&) = default;
};

/// A v->t path avoiding span(A(W)), so A(W) + A(Q) stays independent.
/// Throws NonMaximalWave when none exists.
std::variant<Path, AlreadyAtSink> reach_sink_path(const ContractedSystem& sys,
                                                  const Wave& w, VertexId v);

/// Directed tree rooted at s, stored as edges; every vertex has one
/// incoming tree edge except the root.
struct Arborescence {
  VertexId root = 0;
  std::vector<EdgeId> edges;

  EdgeSet edge_set() const { return {edges.begin(), edges.end()}; }
};

VertexSet arborescence_vertices(const Digraph& d, const Arborescence& a);
/// Empty string when `a` is a valid s-arborescence of `d`.
std::string arborescence_defect(const Digraph& d, const Arborescence& a);
/// The unique root->v tree path.
Path tree_path(const Digraph& d, const Arborescence& a, VertexId v);

struct ArborescenceGrowth {
  Arborescence tree;
  /// Maximal wave of sys.contracted(A(tree)) completely extending W - P.
  Wave wave;
  std::size_t steps = 0;  ///< edges added beyond P
};

/// Grows an s-arborescence from path `w0.paths[path_index]` until it reaches
/// t, keeping a maximal wave of the contracted system alongside.
ArborescenceGrowth grow_arborescence(const ContractedSystem& sys,
                                     const Wave& w0, std::size_t path_index);

struct ProofSolveOptions {
  std::size_t max_vertices = 10;
  std::size_t max_edges = 14;
};

struct ProofSolveStats {
  std::size_t arborescence_edges = 0;
  Wave initial_maximal_wave;
};

/// Builds the certificate by following the wave/arborescence construction:
/// a maximal wave (W0, X0), then one arborescence per path of W0, each in
/// the system contracted by the previous arborescences.
Certificate proof_solve(const Digraph& d, const MatroidPtr& m,
                        const ProofSolveOptions& options = {},
                        ProofSolveStats* stats = nullptr);

}  // namespace menger

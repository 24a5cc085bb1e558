#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "menger/id_set.hpp"

namespace menger {

class Matroid;

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite multidigraph with a distinguished source and sink.
///
/// Edge ids index a fixed edge table. A digraph may hold only part of its
/// table (the "present" edges); deleting edges keeps every id stable, so a
/// matroid keyed by edge id stays valid on every derived digraph.
/// Incidence lists are sorted by ascending edge id and contain present,
/// non-dangling edges only.
class Digraph {
 public:
  Digraph() = default;

  /// All edges present; `edges[i].id` must equal `i`.
  Digraph(std::size_t vertex_count, VertexId source, VertexId sink,
          std::vector<Edge> edges);

  /// Only the ids in `present` are part of the digraph.
  Digraph(std::size_t vertex_count, VertexId source, VertexId sink,
          std::vector<Edge> edge_table, const EdgeSet& present);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_universe() const { return table_.size(); }
  std::size_t edge_count() const { return present_.size(); }
  VertexId source() const { return source_; }
  VertexId sink() const { return sink_; }

  bool has_edge(EdgeId id) const { return present_.contains(id); }
  const Edge& edge(EdgeId id) const { return table_.at(id); }
  const EdgeSet& edges() const { return present_; }
  const std::vector<Edge>& edge_table() const { return table_; }

  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  EdgeSet in_edge_set(VertexId v) const;
  EdgeSet out_edge_set(VertexId v) const;

  VertexSet all_vertices() const { return VertexSet::range(vertex_count_); }

  /// Same vertices and ids, with `removed` deleted.
  Digraph without_edges(const EdgeSet& removed) const;

 private:
  std::size_t vertex_count_ = 0;
  VertexId source_ = 0;
  VertexId sink_ = 0;
  std::vector<Edge> table_;
  EdgeSet present_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
};

/// Directed path stored as its edge ids in traversal order. Vertices are
/// derived from the digraph.
struct Path {
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  EdgeId last_edge() const { return edges.back(); }
  EdgeSet edge_set() const { return {edges.begin(), edges.end()}; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

using PathSystem = std::vector<Path>;

/// Vertex sequence of a nonempty edge sequence; throws PreconditionError
/// when consecutive edges do not chain or an edge is absent from `d`.
std::vector<VertexId> path_vertices(const Digraph& d, const Path& p);
VertexId path_start(const Digraph& d, const Path& p);
VertexId path_end(const Digraph& d, const Path& p);

/// Empty string when `p` is a valid path (nonempty, chained, present
/// edges, no repeated vertex); otherwise a description of the defect.
std::string path_defect(const Digraph& d, const Path& p);

/// A(P): the union of all path edge sets.
EdgeSet united_edges(const PathSystem& ps);
/// A_last(P): the set of last edges.
EdgeSet last_edges(const PathSystem& ps);
/// True when no edge is shared by two paths.
bool edge_disjoint(const PathSystem& ps);

/// Vertex set X is a t-s cut: t in X, s not in X, all members are vertices.
bool is_valid_cut(const Digraph& d, const VertexSet& x);
void require_valid_cut(const Digraph& d, const VertexSet& x);

struct CutBoundary {
  EdgeSet in;   ///< tail outside X, head inside
  EdgeSet out;  ///< tail inside X, head outside
};

CutBoundary cut_boundary(const Digraph& d, const VertexSet& x);

/// in(X) without the validity check; used for arbitrary vertex sets.
EdgeSet entering_edges(const Digraph& d, const VertexSet& x);

struct GreedyDecomposition {
  PathSystem paths;
  EdgeSet unused;
};

/// Splits `edges` into edge-disjoint s->t paths. From s the walk always
/// takes the smallest unused outgoing edge; a closed cycle is cut out and
/// reported in `unused`. Throws MalformedAugmentation when a walk gets stuck
/// away from t, or when `required` is nonnegative and a different number of
/// paths comes out.
GreedyDecomposition build_paths_greedy(const EdgeSet& edges, const Digraph& d,
                                       VertexId s, VertexId t,
                                       long required = -1);

/// Result of merging V \ X into a new source and Y into a new sink.
struct ContractedDigraph {
  Digraph graph;
  /// original_vertex[v] for v in the new digraph; the merged ends hold kMerged.
  std::vector<VertexId> original_vertex;
  static constexpr VertexId kMerged = static_cast<VertexId>(-1);
};

/// Contracts V \ X to a new source and Y to a new sink (Y subset of X, both
/// t-s cuts). Edges inside V \ X or inside Y are dropped; ids are preserved.
/// Vertex numbering: new source 0, then X \ Y ascending, new sink last.
ContractedDigraph contract_system(const Digraph& d, const VertexSet& x,
                                  const VertexSet& y);

/// D minus span_M(A0). A0 must be independent in M.
Digraph delete_spanned(const Digraph& d, const Matroid& m, const EdgeSet& a0);

/// Vertices reachable from `from` along present, non-loop edges.
VertexSet reachable_from(const Digraph& d, VertexId from);

}  // namespace menger

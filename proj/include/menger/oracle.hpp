#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "menger/digraph.hpp"
#include "menger/matroid.hpp"
#include "menger/waves.hpp"

namespace menger {

/// Size limits of the exhaustive routines. `from_env` reads overrides from
/// MATROID_MENGER_GUARDS ("relaxed", or comma-separated key=value pairs
/// with keys max_edges, max_vertices, max_paths, proof_vertices,
/// proof_edges).
struct Guards {
  std::size_t max_edges = 20;
  std::size_t max_vertices = 20;
  std::size_t max_paths = 1'000'000;
  std::size_t proof_vertices = 10;
  std::size_t proof_edges = 14;

  static Guards from_env();
  static Guards parse(const std::string& spec);
};

/// All simple s->t paths, lexicographic by edge-id sequence. Loops never
/// appear. Throws GuardExceeded when more than `limit` paths exist.
std::vector<Path> enumerate_st_paths(const Digraph& d,
                                     std::size_t limit = 1'000'000);

struct MaxPathsResult {
  std::size_t size = 0;
  PathSystem witness;
};

/// Exact maximum number of edge-disjoint s->t paths with independent union,
/// by backtracking over the enumerated paths.
MaxPathsResult max_independent_path_system(const Digraph& d, const Matroid& m,
                                           const Guards& guards = {});

struct MinCutResult {
  std::size_t value = 0;
  VertexSet witness;
};

/// min over t-s cuts X of rank(in(X)); the witness has the smallest bit
/// encoding among minimizers.
MinCutResult min_cut_rank(const Digraph& d, const Matroid& m,
                          const Guards& guards = {});

struct OracleReport {
  std::size_t max_paths = 0;
  std::size_t min_cut_rank = 0;
  PathSystem argmax;
  VertexSet argmin;
  bool duality_holds = false;
};

OracleReport check_duality(const Digraph& d, const Matroid& m,
                           const Guards& guards = {});

/// Unit-capacity max-flow value. Blocks must be free, uniform or partition
/// matroids (capacities become auxiliary bottleneck arcs); any other block
/// kind throws PreconditionError.
std::size_t classic_maxflow_value(const Digraph& d, const DirectSumMatroid& m);

/// Searches every wave (Q, Y) with Y strictly inside the cut of `w` by
/// enumerating s->Y paths and their edge-disjoint subsets; returns one that
/// extends `w`, or nullopt. Independent of find_proper_extension.
std::optional<Wave> brute_force_proper_extension(const ContractedSystem& sys,
                                                 const Wave& w,
                                                 const Guards& guards = {});

}  // namespace menger

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "menger/augment.hpp"
#include "menger/digraph.hpp"
#include "menger/matroid.hpp"

namespace menger {

/// Paths, a t-s cut X and the cover C = A(P) & in(X). Valid when the paths
/// are independent, edge-disjoint s->t paths, no path edge leaves X, and C
/// spans in(X).
struct Certificate {
  PathSystem paths;
  VertexSet cut;
  EdgeSet cover;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct AugmentationRecord {
  AugmentingWalk walk;
  std::size_t rank_before = 0;  ///< rank of A_last(P) before the step
  std::size_t rank_after = 0;
};

/// Augments along shortest walks to t until none exists, then takes
/// X = V \ Y for the reachable endpoint set Y. The certificate is verified
/// before it is returned; a failed check throws InternalInvariantError.
Certificate solve(const Digraph& d, const Matroid& m,
                  std::vector<AugmentationRecord>* trace = nullptr);

/// Repeated augmentation from `start` until no walk reaches t. Returns the
/// final system; `trace` receives one record per step.
PathSystem augment_until_stall(const Digraph& d, const Matroid& m,
                               PathSystem start,
                               std::vector<AugmentationRecord>* trace = nullptr);

struct CertificateCheck {
  bool ok = true;
  std::string clause;  ///< first failed clause, empty when ok
  std::string detail;
  /// Every clause evaluated, in order, with its outcome.
  std::vector<std::pair<std::string, bool>> transcript;
};

/// Independent re-check of every certificate clause. Clause names:
/// "path-shape", "edge-disjoint", "independence", "cut", "out-condition",
/// "span-condition", "cover", "cardinality".
CertificateCheck verify_certificate(const Digraph& d, const Matroid& m,
                                    const Certificate& cert);

/// True iff every s->t path of `d` uses an edge of span(C). Enumerates all
/// paths; throws GuardExceeded past `path_limit`.
bool cover_covers_all_paths(const Digraph& d, const Matroid& m,
                            const Certificate& cert,
                            std::size_t path_limit = 1'000'000);

}  // namespace menger

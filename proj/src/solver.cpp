#include "menger/solver.hpp"

#include "menger/error.hpp"
#include "menger/oracle.hpp"

namespace menger {

PathSystem augment_until_stall(const Digraph& d, const Matroid& m,
                               PathSystem start,
                               std::vector<AugmentationRecord>* trace) {
  PathSystem p = std::move(start);
  while (auto walk = find_shortest_augmenting_walk(d, m, p, d.sink())) {
    const std::size_t before = rank(m, last_edges(p));
    p = apply_augmentation(d, m, p, *walk);
    if (trace != nullptr) {
      trace->push_back(AugmentationRecord{*walk, before, rank(m, last_edges(p))});
    }
  }
  return p;
}

Certificate solve(const Digraph& d, const Matroid& m,
                  std::vector<AugmentationRecord>* trace) {
  Certificate cert;
  cert.paths = augment_until_stall(d, m, {}, trace);
  cert.cut = d.all_vertices() - reachable_endpoints(d, m, cert.paths);
  cert.cover = united_edges(cert.paths) & cut_boundary(d, cert.cut).in;
  const CertificateCheck check = verify_certificate(d, m, cert);
  if (!check.ok) {
    throw InternalInvariantError("solve produced an invalid certificate (" +
                                 check.clause + "): " + check.detail);
  }
  return cert;
}

CertificateCheck verify_certificate(const Digraph& d, const Matroid& m,
                                    const Certificate& cert) {
  CertificateCheck out;
  auto record = [&](const char* clause, bool passed, std::string detail = {}) {
    out.transcript.emplace_back(clause, passed);
    if (!passed && out.ok) {
      out.ok = false;
      out.clause = clause;
      out.detail = std::move(detail);
    }
    return passed;
  };

  std::string shape;
  for (std::size_t i = 0; i < cert.paths.size() && shape.empty(); ++i) {
    const Path& p = cert.paths[i];
    shape = path_defect(d, p);
    if (shape.empty() &&
        (path_start(d, p) != d.source() || path_end(d, p) != d.sink())) {
      shape = "path " + std::to_string(i) + " is not an s->t path";
    }
  }
  if (!record("path-shape", shape.empty(), shape)) return out;

  record("edge-disjoint", edge_disjoint(cert.paths), "paths share an edge");
  const EdgeSet used = united_edges(cert.paths);
  if (!record("independence", used.is_subset_of(m.ground()) && m.is_independent(used),
              "A(P) is dependent")) {
    return out;
  }
  if (!record("cut", is_valid_cut(d, cert.cut),
              "X must contain t and not s")) {
    return out;
  }
  const CutBoundary boundary = cut_boundary(d, cert.cut);
  record("out-condition", !used.intersects(boundary.out),
         "path edges " + (used & boundary.out).to_string() + " leave X");
  const bool cover_ok = cert.cover.is_subset_of(m.ground());
  record("span-condition", cover_ok && spans(m, cert.cover, boundary.in),
         "cover " + cert.cover.to_string() + " does not span in(X) " +
             boundary.in.to_string());
  record("cover", cert.cover == (used & boundary.in),
         "cover differs from A(P) & in(X)");
  const std::size_t cut_rank = rank(m, boundary.in);
  record("cardinality",
         cert.paths.size() == cert.cover.size() && cert.paths.size() == cut_rank,
         "|P|=" + std::to_string(cert.paths.size()) + ", |C|=" +
             std::to_string(cert.cover.size()) + ", rank(in(X))=" +
             std::to_string(cut_rank));
  return out;
}

bool cover_covers_all_paths(const Digraph& d, const Matroid& m,
                            const Certificate& cert, std::size_t path_limit) {
  const EdgeSet spanned = span(m, cert.cover);
  for (const Path& p : enumerate_st_paths(d, path_limit)) {
    if (!p.edge_set().intersects(spanned)) return false;
  }
  return true;
}

}  // namespace menger

#include "menger/waves.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "menger/error.hpp"

namespace menger {

ContractedSystem::ContractedSystem(Digraph base_graph, MatroidPtr base_matroid)
    : ContractedSystem(std::make_shared<const Digraph>(std::move(base_graph)),
                       std::move(base_matroid), EdgeSet{}) {}

ContractedSystem::ContractedSystem(std::shared_ptr<const Digraph> base_graph,
                                   MatroidPtr base_matroid, EdgeSet a0)
    : base_graph_(std::move(base_graph)),
      base_matroid_(std::move(base_matroid)),
      a0_(std::move(a0)) {
  if (!base_graph_->edges().is_subset_of(base_matroid_->ground())) {
    throw PreconditionError("digraph edges outside the matroid ground");
  }
  if (a0_.empty()) {
    if (!matroid_loops(*base_matroid_).empty()) {
      throw PreconditionError("matroid has loops; strip them first");
    }
    graph_ = *base_graph_;
    matroid_ = base_matroid_;
    return;
  }
  if (!base_matroid_->is_independent(a0_)) {
    throw PreconditionError("contracted set " + a0_.to_string() + " is dependent");
  }
  const EdgeSet spanned = span(*base_matroid_, a0_);
  graph_ = base_graph_->without_edges(spanned);
  matroid_ = contract(base_matroid_, spanned);
}

ContractedSystem ContractedSystem::contracted(const EdgeSet& more) const {
  return ContractedSystem(base_graph_, base_matroid_, a0_ | more);
}

Wave make_wave(PathSystem paths, VertexSet cut) {
  std::sort(paths.begin(), paths.end());
  return Wave{std::move(paths), std::move(cut)};
}

WaveCheck check_wave(const ContractedSystem& sys, const Wave& w) {
  const Digraph& d = sys.graph();
  auto bad = [](std::string reason) { return WaveCheck{false, std::move(reason)}; };
  if (!is_valid_cut(d, w.cut)) return bad("cut is not a t-s cut");
  for (const Path& p : w.paths) {
    if (std::string defect = path_defect(d, p); !defect.empty()) return bad(defect);
    const std::vector<VertexId> vs = path_vertices(d, p);
    if (vs.front() != d.source()) return bad("path does not start at s");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (w.cut.contains(vs[i])) return bad("path meets the cut before its end");
    }
    if (!w.cut.contains(vs.back())) return bad("path does not end in the cut");
  }
  if (!edge_disjoint(w.paths)) return bad("paths share an edge");
  const EdgeSet used = united_edges(w.paths);
  if (!sys.matroid().is_independent(used)) return bad("A(W) is dependent");
  if (!spans(sys.matroid(), last_edges(w.paths), entering_edges(d, w.cut))) {
    return bad("last edges do not span in(X)");
  }
  return {};
}

Wave trivial_wave(const ContractedSystem& sys) {
  const Digraph& d = sys.graph();
  EdgeSet leaving;
  for (EdgeId id : d.out_edges(d.source())) {
    if (!d.edge(id).is_loop()) leaving.insert(id);
  }
  PathSystem paths;
  for (std::size_t id : greedy_basis(sys.matroid(), leaving)) {
    paths.push_back(Path{{static_cast<EdgeId>(id)}});
  }
  return make_wave(std::move(paths), d.all_vertices().without(d.source()));
}

namespace {

bool is_prefix(const Path& prefix, const Path& p) {
  return prefix.edges.size() <= p.edges.size() &&
         std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

/// Index of the w path that `q` forward-continues, or -1.
long continued_from(const PathSystem& w, const Path& q) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_prefix(w[i], q)) return static_cast<long>(i);
  }
  return -1;
}

bool continuation_inside(const Digraph& d, const Path& prefix, const Path& q,
                         const VertexSet& x) {
  for (std::size_t i = prefix.edges.size(); i < q.edges.size(); ++i) {
    if (!x.contains(d.edge(q.edges[i]).head)) return false;
  }
  return true;
}

bool meets(const Digraph& d, const Path& p, const VertexSet& x) {
  for (VertexId v : path_vertices(d, p)) {
    if (x.contains(v)) return true;
  }
  return false;
}

}  // namespace

WaveOrder compare_waves(const ContractedSystem& sys, const Wave& w0,
                        const Wave& w1) {
  const Digraph& d = sys.graph();
  WaveOrder order;
  if (!w1.cut.is_subset_of(w0.cut)) {
    order.reason = "X1 is not inside X0";
    return order;
  }
  std::vector<char> continued(w0.paths.size(), 0);
  for (const Path& q : w1.paths) {
    const long i = continued_from(w0.paths, q);
    if (i < 0) {
      order.reason = "a path of W1 continues no path of W0";
      return order;
    }
    if (!continuation_inside(d, w0.paths[i], q, w0.cut)) {
      order.reason = "a continuation leaves X0";
      return order;
    }
    continued[i] = 1;
  }
  for (const Path& p : w0.paths) {
    if (meets(d, p, w1.cut) &&
        std::find(w1.paths.begin(), w1.paths.end(), p) == w1.paths.end()) {
      order.reason = "a W0 path meeting X1 is missing from W1";
      return order;
    }
  }
  order.extends = true;
  order.complete = std::all_of(continued.begin(), continued.end(),
                               [](char c) { return c != 0; });
  order.proper = w1.cut != w0.cut;
  return order;
}

Wave merge_waves(const ContractedSystem& sys, const Wave& w, const Wave& q) {
  const Digraph& d = sys.graph();
  if (!q.cut.is_subset_of(w.cut)) {
    throw PreconditionError("merge_waves: Y is not inside X");
  }
  for (const Path& p : q.paths) {
    const long i = continued_from(w.paths, p);
    if (i < 0 || !continuation_inside(d, w.paths[i], p, w.cut)) {
      throw PreconditionError(
          "merge_waves: Q is not made of continuations of W inside X");
    }
  }
  PathSystem kept;
  for (const Path& p : w.paths) {
    if (q.cut.contains(path_end(d, p))) kept.push_back(p);
  }
  const EdgeSet base =
      greedy_basis_extending(sys.matroid(), last_edges(kept), last_edges(q.paths));
  PathSystem merged = kept;
  for (const Path& p : q.paths) {
    if (p.edge_set().intersects(base) &&
        std::find(merged.begin(), merged.end(), p) == merged.end()) {
      merged.push_back(p);
    }
  }
  Wave out = make_wave(std::move(merged), q.cut);
  if (WaveCheck c = check_wave(sys, out); !c.ok) {
    throw PreconditionError("merge_waves: result is not a wave: " + c.reason);
  }
  if (!compare_waves(sys, w, out).extends) {
    throw InternalInvariantError("merge_waves: result does not extend W");
  }
  return out;
}

Wave truncate_to_cut(const ContractedSystem& sys, const PathSystem& paths,
                     const VertexSet& z) {
  const Digraph& d = sys.graph();
  require_valid_cut(d, z);
  const CutBoundary boundary = cut_boundary(d, z);
  const EdgeSet used = united_edges(paths);
  if (used.intersects(boundary.out)) {
    throw PreconditionError("truncate_to_cut: a path leaves Z");
  }
  if (!spans(sys.matroid(), used & boundary.in, boundary.in)) {
    throw PreconditionError("truncate_to_cut: path edges do not span in(Z)");
  }
  PathSystem cut_paths;
  for (const Path& p : paths) {
    Path prefix;
    for (EdgeId id : p.edges) {
      prefix.edges.push_back(id);
      if (z.contains(d.edge(id).head)) break;
    }
    if (!z.contains(path_end(d, prefix))) {
      throw PreconditionError("truncate_to_cut: a path never reaches Z");
    }
    cut_paths.push_back(std::move(prefix));
  }
  Wave out = make_wave(std::move(cut_paths), z);
  if (WaveCheck c = check_wave(sys, out); !c.ok) {
    throw InternalInvariantError("truncate_to_cut: " + c.reason);
  }
  return out;
}

std::optional<Wave> find_proper_extension(const ContractedSystem& sys,
                                          const Wave& w) {
  if (WaveCheck c = check_wave(sys, w); !c.ok) {
    throw PreconditionError("find_proper_extension: input is not a wave: " +
                            c.reason);
  }
  const Digraph& d = sys.graph();
  const Matroid& m = sys.matroid();
  const VertexId t = d.sink();
  const std::vector<std::size_t> others = w.cut.without(t).to_vector();
  if (others.size() >= 31) {
    throw GuardExceeded("find_proper_extension: cut too large to scan");
  }

  // Only the last edges of W may enter X while searching; the rest are
  // restored when checking that in(Y) is spanned.
  const EdgeSet entering = entering_edges(d, w.cut);
  const Digraph restricted =
      d.without_edges(entering - united_edges(w.paths));

  std::vector<std::uint32_t> masks;
  const std::uint32_t full = (1U << others.size()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  for (std::uint32_t mask : masks) {
    VertexSet y{t};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((mask >> i) & 1U) y.insert(others[i]);
    }
    const ContractedDigraph cd = contract_system(restricted, w.cut, y);
    const PathSystem r = augment_until_stall(cd.graph, m, {});

    PathSystem kept;
    for (const Path& p : w.paths) {
      if (y.contains(path_end(d, p))) kept.push_back(p);
    }
    if (!spans(m, last_edges(kept) | last_edges(r), entering_edges(d, y))) {
      continue;
    }

    PathSystem continuations;
    for (const Path& seg : r) {
      auto it = std::find_if(w.paths.begin(), w.paths.end(), [&](const Path& p) {
        return p.last_edge() == seg.edges.front();
      });
      if (it == w.paths.end()) {
        throw InternalInvariantError(
            "contracted path does not start with a last edge of W");
      }
      Path joined = *it;
      joined.edges.insert(joined.edges.end(), seg.edges.begin() + 1, seg.edges.end());
      continuations.push_back(std::move(joined));
    }
    Wave out = merge_waves(sys, w, make_wave(std::move(continuations), y));
    const WaveOrder order = compare_waves(sys, w, out);
    if (!order.extends || !order.proper) {
      throw InternalInvariantError("extension found is not proper");
    }
    return out;
  }
  return std::nullopt;
}

Wave maximal_wave(const ContractedSystem& sys, const Wave& start) {
  Wave w = start;
  while (auto next = find_proper_extension(sys, w)) w = std::move(*next);
  return w;
}

Wave chain_sup(const ContractedSystem& sys, std::span<const Wave> chain) {
  if (chain.empty()) throw PreconditionError("chain_sup: empty chain");
  const Wave* top = &chain.front();
  for (const Wave& w : chain) {
    if (compare_waves(sys, *top, w).extends) {
      top = &w;
    } else if (!compare_waves(sys, w, *top).extends) {
      throw PreconditionError("chain_sup: waves are not linearly ordered");
    }
  }
  for (const Wave& w : chain) {
    if (!compare_waves(sys, w, *top).extends) {
      throw PreconditionError("chain_sup: waves are not linearly ordered");
    }
  }
  return *top;
}

std::variant<Path, AlreadyAtSink> reach_sink_path(const ContractedSystem& sys,
                                                  const Wave& w, VertexId v) {
  const Digraph& d = sys.graph();
  if (!w.cut.contains(v)) {
    throw PreconditionError("reach_sink_path: vertex is outside the cut");
  }
  if (v == d.sink()) return AlreadyAtSink{};
  const EdgeSet used = united_edges(w.paths);
  const Digraph free_part = d.without_edges(span(sys.matroid(), used));

  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> via(d.vertex_count(), kNone);
  VertexSet seen{v};
  std::deque<VertexId> queue{v};
  while (!queue.empty() && !seen.contains(d.sink())) {
    const VertexId at = queue.front();
    queue.pop_front();
    for (EdgeId id : free_part.out_edges(at)) {
      const VertexId h = d.edge(id).head;
      if (seen.contains(h)) continue;
      seen.insert(h);
      via[h] = id;
      queue.push_back(h);
    }
  }
  if (!seen.contains(d.sink())) {
    throw NonMaximalWave("no path from vertex " + std::to_string(v) +
                         " to t avoids span(A(W)); the wave is not maximal");
  }
  Path q;
  for (VertexId at = d.sink(); at != v; at = d.edge(via[at]).tail) {
    q.edges.push_back(via[at]);
  }
  std::reverse(q.edges.begin(), q.edges.end());
  if (!sys.matroid().is_independent(used | q.edge_set())) {
    throw InternalInvariantError("reach_sink_path: A(W) + A(Q) is dependent");
  }
  return q;
}

VertexSet arborescence_vertices(const Digraph& d, const Arborescence& a) {
  VertexSet out{a.root};
  for (EdgeId id : a.edges) out.insert(d.edge(id).head);
  return out;
}

std::string arborescence_defect(const Digraph& d, const Arborescence& a) {
  VertexSet reached{a.root};
  EdgeSet pending(a.edges.begin(), a.edges.end());
  if (pending.size() != a.edges.size()) return "repeated edge";
  VertexSet heads;
  for (EdgeId id : a.edges) {
    const VertexId h = d.edge(id).head;
    if (h == a.root || heads.contains(h)) return "vertex with two tree parents";
    heads.insert(h);
  }
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    for (std::size_t id : pending) {
      const Edge& e = d.edge(static_cast<EdgeId>(id));
      if (reached.contains(e.tail)) {
        reached.insert(e.head);
        pending.erase(id);
        progress = true;
        break;
      }
    }
  }
  if (!pending.empty()) return "edges unreachable from the root";
  return {};
}

Path tree_path(const Digraph& d, const Arborescence& a, VertexId v) {
  Path p;
  VertexId at = v;
  while (at != a.root) {
    auto it = std::find_if(a.edges.begin(), a.edges.end(),
                           [&](EdgeId id) { return d.edge(id).head == at; });
    if (it == a.edges.end()) {
      throw PreconditionError("tree_path: vertex not in the arborescence");
    }
    p.edges.push_back(*it);
    at = d.edge(*it).tail;
  }
  std::reverse(p.edges.begin(), p.edges.end());
  return p;
}

namespace {

ArborescenceGrowth grow_from_maximal(const ContractedSystem& sys, const Wave& w0,
                                     std::size_t path_index) {
  const Digraph& d = sys.graph();
  const Matroid& m = sys.matroid();
  const Path& start = w0.paths.at(path_index);
  PathSystem rest = w0.paths;
  rest.erase(rest.begin() + static_cast<long>(path_index));
  const Wave rest_wave = make_wave(rest, w0.cut);

  ArborescenceGrowth out;
  out.tree.root = d.source();
  out.tree.edges = start.edges;
  VertexSet tree_vertices = arborescence_vertices(d, out.tree);

  ContractedSystem current = sys.contracted(start.edge_set());
  Wave wave = rest_wave;
  if (WaveCheck c = check_wave(current, wave); !c.ok) {
    throw InternalInvariantError("W - P is not a wave after contracting P: " + c.reason);
  }
  if (find_proper_extension(current, wave)) {
    throw InternalInvariantError("W - P is not maximal after contracting P");
  }

  while (!tree_vertices.contains(d.sink())) {
    const EdgeSet blocked = span(m, united_edges(wave.paths));
    long pick = -1;
    for (std::size_t id : d.edges()) {
      const Edge& e = d.edge(static_cast<EdgeId>(id));
      if (tree_vertices.contains(e.tail) && !tree_vertices.contains(e.head) &&
          !blocked.contains(id)) {
        pick = static_cast<long>(id);
        break;
      }
    }
    if (pick < 0) {
      throw InternalInvariantError(
          "no unspanned edge leaves the arborescence before reaching t");
    }
    const EdgeId e = static_cast<EdgeId>(pick);
    out.tree.edges.push_back(e);
    tree_vertices.insert(d.edge(e).head);
    ++out.steps;

    const EdgeSet tree_edges = out.tree.edge_set();
    const EdgeSet wave_edges = united_edges(wave.paths);
    if (tree_edges.intersects(wave_edges) ||
        !m.is_independent(tree_edges | wave_edges)) {
      throw InternalInvariantError("arborescence collides with the wave");
    }
    ContractedSystem next = sys.contracted(tree_edges);
    if (WaveCheck c = check_wave(next, wave); !c.ok) {
      throw InternalInvariantError("wave lost after contracting the new edge: " +
                                   c.reason);
    }
    Wave grown = maximal_wave(next, wave);
    const WaveOrder order = compare_waves(next, wave, grown);
    if (!order.extends || !order.complete) {
      throw InternalInvariantError("maximal wave is not a complete extension");
    }
    wave = std::move(grown);
    current = std::move(next);
  }

  const EdgeSet tree_edges = out.tree.edge_set();
  const EdgeSet rest_edges = united_edges(rest);
  if (std::string defect = arborescence_defect(d, out.tree); !defect.empty()) {
    throw InternalInvariantError("grown tree is not an arborescence: " + defect);
  }
  if (tree_edges.intersects(rest_edges) || !m.is_independent(tree_edges | rest_edges)) {
    throw InternalInvariantError("arborescence conflicts with W - P");
  }
  if (!compare_waves(current, rest_wave, wave).complete) {
    throw InternalInvariantError("final wave does not completely extend W - P");
  }
  out.wave = std::move(wave);
  return out;
}

}  // namespace

ArborescenceGrowth grow_arborescence(const ContractedSystem& sys, const Wave& w0,
                                     std::size_t path_index) {
  if (WaveCheck c = check_wave(sys, w0); !c.ok) {
    throw PreconditionError("grow_arborescence: not a wave: " + c.reason);
  }
  if (path_index >= w0.paths.size()) {
    throw PreconditionError("grow_arborescence: path index out of range");
  }
  if (find_proper_extension(sys, w0)) {
    throw PreconditionError("grow_arborescence: wave is not maximal");
  }
  return grow_from_maximal(sys, w0, path_index);
}

Certificate proof_solve(const Digraph& d, const MatroidPtr& m,
                        const ProofSolveOptions& options, ProofSolveStats* stats) {
  if (d.vertex_count() > options.max_vertices || d.edge_count() > options.max_edges) {
    throw GuardExceeded("proof_solve: instance has " +
                        std::to_string(d.vertex_count()) + " vertices and " +
                        std::to_string(d.edge_count()) + " edges; cap is " +
                        std::to_string(options.max_vertices) + "/" +
                        std::to_string(options.max_edges));
  }
  ContractedSystem sys(d, m);
  const Wave initial = maximal_wave(sys, trivial_wave(sys));
  if (stats != nullptr) stats->initial_maximal_wave = initial;

  Wave current = initial;
  PathSystem found;
  for (const Path& original : initial.paths) {
    const long index = [&] {
      for (std::size_t i = 0; i < current.paths.size(); ++i) {
        if (is_prefix(original, current.paths[i])) return static_cast<long>(i);
      }
      return -1L;
    }();
    if (index < 0) {
      throw InternalInvariantError("a path of the initial wave lost its continuation");
    }
    const Path& prefix = current.paths[static_cast<std::size_t>(index)];
    ArborescenceGrowth growth =
        grow_from_maximal(sys, current, static_cast<std::size_t>(index));
    Path through = tree_path(sys.graph(), growth.tree, d.sink());
    if (!is_prefix(prefix, through)) {
      throw InternalInvariantError("s->t tree path does not continue its wave path");
    }
    if (stats != nullptr) stats->arborescence_edges += growth.tree.edges.size();
    found.push_back(std::move(through));
    sys = sys.contracted(growth.tree.edge_set());
    current = std::move(growth.wave);
  }

  Certificate cert;
  cert.paths = std::move(found);
  cert.cut = initial.cut;
  cert.cover = united_edges(cert.paths) & cut_boundary(d, cert.cut).in;
  const CertificateCheck check = verify_certificate(d, *m, cert);
  if (!check.ok) {
    throw InternalInvariantError("proof_solve produced an invalid certificate (" +
                                 check.clause + "): " + check.detail);
  }
  return cert;
}

}  // namespace menger

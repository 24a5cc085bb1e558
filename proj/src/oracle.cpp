#include "menger/oracle.hpp"

#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <sstream>

#include "menger/error.hpp"

namespace menger {

Guards Guards::parse(const std::string& spec) {
  Guards g;
  if (spec.empty()) return g;
  if (spec == "relaxed" || spec == "off") {
    g.max_edges = 40;
    g.max_vertices = 30;
    g.max_paths = 100'000'000;
    g.proof_vertices = 30;
    g.proof_edges = 60;
    return g;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("MATROID_MENGER_GUARDS: expected key=value, got '" +
                              item + "'");
    }
    const std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw PreconditionError("MATROID_MENGER_GUARDS: bad number in '" + item + "'");
    }
    if (key == "max_edges") {
      g.max_edges = value;
    } else if (key == "max_vertices") {
      g.max_vertices = value;
    } else if (key == "max_paths") {
      g.max_paths = value;
    } else if (key == "proof_vertices") {
      g.proof_vertices = value;
    } else if (key == "proof_edges") {
      g.proof_edges = value;
    } else {
      throw PreconditionError("MATROID_MENGER_GUARDS: unknown key '" + key + "'");
    }
  }
  return g;
}

Guards Guards::from_env() {
  const char* env = std::getenv("MATROID_MENGER_GUARDS");
  return parse(env == nullptr ? std::string{} : std::string{env});
}

namespace {

/// Depth-first enumeration of simple paths from s that stop at the first
/// vertex accepted by `is_end`; edges are tried in ascending id order.
void enumerate_paths_to(const Digraph& d, const std::function<bool(VertexId)>& is_end,
                        std::size_t limit, std::vector<Path>& out) {
  std::vector<EdgeId> stack;
  VertexSet on_path{d.source()};
  std::function<void(VertexId)> visit = [&](VertexId at) {
    for (EdgeId id : d.out_edges(at)) {
      const VertexId h = d.edge(id).head;
      if (on_path.contains(h)) continue;
      stack.push_back(id);
      if (is_end(h)) {
        if (out.size() >= limit) {
          throw GuardExceeded("more than " + std::to_string(limit) + " paths");
        }
        out.push_back(Path{stack});
      } else {
        on_path.insert(h);
        visit(h);
        on_path.erase(h);
      }
      stack.pop_back();
    }
  };
  if (!is_end(d.source())) visit(d.source());
}

}  // namespace

std::vector<Path> enumerate_st_paths(const Digraph& d, std::size_t limit) {
  std::vector<Path> out;
  const VertexId t = d.sink();
  enumerate_paths_to(d, [t](VertexId v) { return v == t; }, limit, out);
  return out;
}

MaxPathsResult max_independent_path_system(const Digraph& d, const Matroid& m,
                                           const Guards& guards) {
  if (d.edge_count() > guards.max_edges) {
    throw GuardExceeded("max_independent_path_system: " +
                        std::to_string(d.edge_count()) + " edges exceed the guard of " +
                        std::to_string(guards.max_edges));
  }
  const std::vector<Path> paths = enumerate_st_paths(d, guards.max_paths);
  std::vector<EdgeSet> sets;
  sets.reserve(paths.size());
  for (const Path& p : paths) sets.push_back(p.edge_set());
  const EdgeSet leaving = d.out_edge_set(d.source());

  MaxPathsResult best;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const EdgeSet&)> search =
      [&](std::size_t from, const EdgeSet& used) {
        if (chosen.size() > best.size) {
          best.size = chosen.size();
          best.witness.clear();
          for (std::size_t i : chosen) best.witness.push_back(paths[i]);
        }
        const std::size_t spare_starts = (leaving - used).size();
        if (chosen.size() + std::min(spare_starts, paths.size() - from) <= best.size) {
          return;
        }
        for (std::size_t i = from; i < paths.size(); ++i) {
          if (sets[i].intersects(used)) continue;
          EdgeSet next = used | sets[i];
          if (!m.is_independent(next)) continue;
          chosen.push_back(i);
          search(i + 1, next);
          chosen.pop_back();
        }
      };
  search(0, EdgeSet{});
  return best;
}

MinCutResult min_cut_rank(const Digraph& d, const Matroid& m, const Guards& guards) {
  if (d.vertex_count() > guards.max_vertices) {
    throw GuardExceeded("min_cut_rank: " + std::to_string(d.vertex_count()) +
                        " vertices exceed the guard of " +
                        std::to_string(guards.max_vertices));
  }
  std::vector<VertexId> others;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (v != d.source() && v != d.sink()) others.push_back(v);
  }
  MinCutResult best;
  best.value = std::numeric_limits<std::size_t>::max();
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    VertexSet x{d.sink()};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((mask >> i) & 1U) x.insert(others[i]);
    }
    const std::size_t value = rank(m, entering_edges(d, x));
    if (value < best.value) {
      best.value = value;
      best.witness = x;
    }
  }
  return best;
}

OracleReport check_duality(const Digraph& d, const Matroid& m, const Guards& guards) {
  OracleReport report;
  MaxPathsResult max = max_independent_path_system(d, m, guards);
  MinCutResult min = min_cut_rank(d, m, guards);
  report.max_paths = max.size;
  report.argmax = std::move(max.witness);
  report.min_cut_rank = min.value;
  report.argmin = std::move(min.witness);
  report.duality_holds = report.max_paths == report.min_cut_rank;
  return report;
}

namespace {

/// Plain Edmonds-Karp on an integer-capacity network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, long capacity) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, capacity});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
  }

  long max_flow(std::size_t s, std::size_t t) {
    long total = 0;
    for (;;) {
      std::vector<long> via(adj_.size(), -1);
      std::deque<std::size_t> queue{s};
      std::vector<char> seen(adj_.size(), 0);
      seen[s] = 1;
      while (!queue.empty() && !seen[t]) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (std::size_t a : adj_[at]) {
          if (arcs_[a].capacity > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = 1;
            via[arcs_[a].to] = static_cast<long>(a);
            queue.push_back(arcs_[a].to);
          }
        }
      }
      if (!seen[t]) return total;
      long push = std::numeric_limits<long>::max();
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        push = std::min(push, arcs_[via[v]].capacity);
      }
      for (std::size_t v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        arcs_[via[v]].capacity -= push;
        arcs_[via[v] ^ 1].capacity += push;
      }
      total += push;
    }
  }

 private:
  struct Arc {
    std::size_t to;
    long capacity;
  };
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace

std::size_t classic_maxflow_value(const Digraph& d, const DirectSumMatroid& m) {
  // Edge id -> network node its head is redirected to.
  std::vector<std::size_t> entry(d.edge_universe());
  for (std::size_t id : d.edges()) entry[id] = d.edge(static_cast<EdgeId>(id)).head;

  struct Bottleneck {
    EdgeSet edges;
    VertexId vertex;
    long capacity;
  };
  std::vector<Bottleneck> bottlenecks;
  for (const MatroidPtr& block : m.blocks()) {
    if (block->ground().empty()) continue;
    const VertexId v = d.edge(static_cast<EdgeId>(block->ground().front())).head;
    if (dynamic_cast<const FreeMatroid*>(block.get()) != nullptr) continue;
    if (const auto* u = dynamic_cast<const UniformMatroid*>(block.get())) {
      bottlenecks.push_back({block->ground(), v, static_cast<long>(u->rank_bound())});
      continue;
    }
    if (const auto* p = dynamic_cast<const PartitionMatroid*>(block.get())) {
      for (const PartitionBlock& b : p->blocks()) {
        bottlenecks.push_back({b.edges, v, static_cast<long>(b.capacity)});
      }
      continue;
    }
    throw PreconditionError("classic_maxflow_value: a " + block->kind() +
                            " block has no capacity reduction");
  }

  FlowNetwork net(d.vertex_count() + bottlenecks.size());
  for (std::size_t i = 0; i < bottlenecks.size(); ++i) {
    const std::size_t node = d.vertex_count() + i;
    net.add_arc(node, bottlenecks[i].vertex, bottlenecks[i].capacity);
    for (std::size_t id : bottlenecks[i].edges) entry[id] = node;
  }
  for (std::size_t id : d.edges()) {
    const Edge& e = d.edge(static_cast<EdgeId>(id));
    if (e.is_loop()) continue;
    net.add_arc(e.tail, entry[id], 1);
  }
  return static_cast<std::size_t>(net.max_flow(d.source(), d.sink()));
}

std::optional<Wave> brute_force_proper_extension(const ContractedSystem& sys,
                                                 const Wave& w,
                                                 const Guards& guards) {
  const Digraph& d = sys.graph();
  const Matroid& m = sys.matroid();
  const VertexId t = d.sink();
  const std::vector<std::size_t> others = w.cut.without(t).to_vector();
  if (others.size() >= 31) throw GuardExceeded("brute_force_proper_extension: cut too large");
  const std::uint32_t full = (1U << others.size()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    VertexSet y{t};
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((mask >> i) & 1U) y.insert(others[i]);
    }
    std::vector<Path> candidates;
    enumerate_paths_to(d, [&y](VertexId v) { return y.contains(v); },
                       guards.max_paths, candidates);
    std::vector<EdgeSet> sets;
    for (const Path& p : candidates) sets.push_back(p.edge_set());

    std::optional<Wave> found;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, const EdgeSet&)> search =
        [&](std::size_t from, const EdgeSet& used) {
          if (found) return;
          PathSystem ps;
          for (std::size_t i : chosen) ps.push_back(candidates[i]);
          Wave q = make_wave(std::move(ps), y);
          if (check_wave(sys, q).ok && compare_waves(sys, w, q).extends) {
            found = std::move(q);
            return;
          }
          for (std::size_t i = from; i < candidates.size(); ++i) {
            if (sets[i].intersects(used)) continue;
            EdgeSet next = used | sets[i];
            if (!m.is_independent(next)) continue;
            chosen.push_back(i);
            search(i + 1, next);
            chosen.pop_back();
            if (found) return;
          }
        };
    search(0, EdgeSet{});
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace menger

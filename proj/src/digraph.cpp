#include "menger/digraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "menger/error.hpp"
#include "menger/matroid.hpp"

namespace menger {

Digraph::Digraph(std::size_t vertex_count, VertexId source, VertexId sink,
                 std::vector<Edge> edges)
    : Digraph(vertex_count, source, sink, edges, EdgeSet::range(edges.size())) {}

Digraph::Digraph(std::size_t vertex_count, VertexId source, VertexId sink,
                 std::vector<Edge> edge_table, const EdgeSet& present)
    : vertex_count_(vertex_count),
      source_(source),
      sink_(sink),
      table_(std::move(edge_table)),
      present_(present),
      in_(vertex_count),
      out_(vertex_count) {
  if (source_ >= vertex_count_ || sink_ >= vertex_count_) {
    throw PreconditionError("source or sink is not a vertex");
  }
  if (source_ == sink_) throw PreconditionError("source and sink coincide");
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i].id != i) {
      throw PreconditionError("edge table entry " + std::to_string(i) +
                              " carries id " + std::to_string(table_[i].id));
    }
  }
  for (std::size_t id : present_) {
    if (id >= table_.size()) {
      throw PreconditionError("present edge " + std::to_string(id) +
                              " is outside the edge table");
    }
    const Edge& e = table_[id];
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw PreconditionError("edge " + std::to_string(id) +
                              " has an endpoint outside the vertex range");
    }
    out_[e.tail].push_back(e.id);
    in_[e.head].push_back(e.id);
  }
}

EdgeSet Digraph::in_edge_set(VertexId v) const {
  auto ids = in_edges(v);
  return {ids.begin(), ids.end()};
}

EdgeSet Digraph::out_edge_set(VertexId v) const {
  auto ids = out_edges(v);
  return {ids.begin(), ids.end()};
}

Digraph Digraph::without_edges(const EdgeSet& removed) const {
  return Digraph(vertex_count_, source_, sink_, table_, present_ - removed);
}

std::vector<VertexId> path_vertices(const Digraph& d, const Path& p) {
  if (p.edges.empty()) throw PreconditionError("empty path");
  std::vector<VertexId> out;
  out.reserve(p.edges.size() + 1);
  for (EdgeId id : p.edges) {
    if (!d.has_edge(id)) {
      throw PreconditionError("path uses absent edge " + std::to_string(id));
    }
    const Edge& e = d.edge(id);
    if (out.empty()) {
      out.push_back(e.tail);
    } else if (out.back() != e.tail) {
      throw PreconditionError("path edges do not chain at edge " +
                              std::to_string(id));
    }
    out.push_back(e.head);
  }
  return out;
}

VertexId path_start(const Digraph& d, const Path& p) {
  if (p.edges.empty()) throw PreconditionError("empty path");
  return d.edge(p.edges.front()).tail;
}

VertexId path_end(const Digraph& d, const Path& p) {
  if (p.edges.empty()) throw PreconditionError("empty path");
  return d.edge(p.edges.back()).head;
}

std::string path_defect(const Digraph& d, const Path& p) {
  if (p.edges.empty()) return "empty path";
  std::vector<VertexId> vs;
  try {
    vs = path_vertices(d, p);
  } catch (const PreconditionError& e) {
    return e.what();
  }
  std::vector<VertexId> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "path repeats a vertex";
  }
  return {};
}

EdgeSet united_edges(const PathSystem& ps) {
  EdgeSet out;
  for (const Path& p : ps) {
    for (EdgeId e : p.edges) out.insert(e);
  }
  return out;
}

EdgeSet last_edges(const PathSystem& ps) {
  EdgeSet out;
  for (const Path& p : ps) {
    if (!p.edges.empty()) out.insert(p.last_edge());
  }
  return out;
}

bool edge_disjoint(const PathSystem& ps) {
  EdgeSet seen;
  for (const Path& p : ps) {
    for (EdgeId e : p.edges) {
      if (seen.contains(e)) return false;
      seen.insert(e);
    }
  }
  return true;
}

bool is_valid_cut(const Digraph& d, const VertexSet& x) {
  return x.contains(d.sink()) && !x.contains(d.source()) &&
         x.is_subset_of(d.all_vertices());
}

void require_valid_cut(const Digraph& d, const VertexSet& x) {
  if (!x.is_subset_of(d.all_vertices())) {
    throw PreconditionError("cut " + x.to_string() + " names a non-vertex");
  }
  if (x.contains(d.source())) {
    throw PreconditionError("invalid cut: contains the source");
  }
  if (!x.contains(d.sink())) {
    throw PreconditionError("invalid cut: misses the sink");
  }
}

EdgeSet entering_edges(const Digraph& d, const VertexSet& x) {
  EdgeSet in;
  for (std::size_t id : d.edges()) {
    const Edge& e = d.edge(static_cast<EdgeId>(id));
    if (!x.contains(e.tail) && x.contains(e.head)) in.insert(id);
  }
  return in;
}

CutBoundary cut_boundary(const Digraph& d, const VertexSet& x) {
  require_valid_cut(d, x);
  CutBoundary b;
  for (std::size_t id : d.edges()) {
    const Edge& e = d.edge(static_cast<EdgeId>(id));
    const bool tail_in = x.contains(e.tail);
    const bool head_in = x.contains(e.head);
    if (!tail_in && head_in) b.in.insert(id);
    if (tail_in && !head_in) b.out.insert(id);
  }
  return b;
}

GreedyDecomposition build_paths_greedy(const EdgeSet& edges, const Digraph& d,
                                       VertexId s, VertexId t, long required) {
  GreedyDecomposition result;
  EdgeSet remaining;
  for (std::size_t id : edges) {
    if (!d.has_edge(static_cast<EdgeId>(id))) {
      throw MalformedAugmentation("edge " + std::to_string(id) +
                                  " is not in the digraph");
    }
    if (d.edge(static_cast<EdgeId>(id)).is_loop()) {
      result.unused.insert(id);
    } else {
      remaining.insert(id);
    }
  }

  auto next_edge = [&](VertexId v) -> long {
    for (EdgeId id : d.out_edges(v)) {
      if (remaining.contains(id)) return id;
    }
    return -1;
  };

  while (next_edge(s) >= 0) {
    std::vector<EdgeId> walk;
    std::unordered_map<VertexId, std::size_t> position{{s, 0}};
    VertexId cur = s;
    while (cur != t) {
      const long next = next_edge(cur);
      if (next < 0) {
        throw MalformedAugmentation("greedy walk stuck at vertex " +
                                    std::to_string(cur));
      }
      const EdgeId id = static_cast<EdgeId>(next);
      remaining.erase(id);
      walk.push_back(id);
      cur = d.edge(id).head;
      if (auto it = position.find(cur); it != position.end()) {
        // Cut out the closed cycle that just returned to `cur`.
        for (std::size_t i = it->second; i < walk.size(); ++i) {
          result.unused.insert(walk[i]);
          if (i > it->second) position.erase(d.edge(walk[i - 1]).head);
        }
        walk.resize(it->second);
      } else {
        position.emplace(cur, walk.size());
      }
    }
    result.paths.push_back(Path{std::move(walk)});
  }
  result.unused |= remaining;

  if (required >= 0 && result.paths.size() != static_cast<std::size_t>(required)) {
    throw MalformedAugmentation("greedy decomposition produced " +
                                std::to_string(result.paths.size()) +
                                " paths, expected " + std::to_string(required));
  }
  return result;
}

ContractedDigraph contract_system(const Digraph& d, const VertexSet& x,
                                  const VertexSet& y) {
  require_valid_cut(d, x);
  require_valid_cut(d, y);
  if (!y.is_subset_of(x)) {
    throw PreconditionError("contract_system: Y is not a subset of X");
  }
  ContractedDigraph out;
  constexpr VertexId kNone = static_cast<VertexId>(-1);
  std::vector<VertexId> image(d.vertex_count(), kNone);
  out.original_vertex.push_back(ContractedDigraph::kMerged);
  for (std::size_t v : x - y) {
    image[v] = static_cast<VertexId>(out.original_vertex.size());
    out.original_vertex.push_back(static_cast<VertexId>(v));
  }
  const VertexId new_source = 0;
  const VertexId new_sink = static_cast<VertexId>(out.original_vertex.size());
  out.original_vertex.push_back(ContractedDigraph::kMerged);
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    if (!x.contains(v)) image[v] = new_source;
    if (y.contains(v)) image[v] = new_sink;
  }

  std::vector<Edge> table = d.edge_table();
  EdgeSet present;
  for (std::size_t id : d.edges()) {
    const Edge& e = d.edge(static_cast<EdgeId>(id));
    const bool outside = !x.contains(e.tail) && !x.contains(e.head);
    const bool inside_y = y.contains(e.tail) && y.contains(e.head);
    if (outside || inside_y) continue;
    table[id].tail = image[e.tail];
    table[id].head = image[e.head];
    present.insert(id);
  }
  // Absent entries keep stale endpoints; clamp them into range.
  for (Edge& e : table) {
    if (!present.contains(e.id)) {
      e.tail = new_source;
      e.head = new_source;
    }
  }
  out.graph = Digraph(out.original_vertex.size(), new_source, new_sink,
                      std::move(table), present);
  return out;
}

Digraph delete_spanned(const Digraph& d, const Matroid& m, const EdgeSet& a0) {
  if (!m.is_independent(a0)) {
    throw PreconditionError("delete_spanned: A0 " + a0.to_string() +
                            " is dependent");
  }
  return d.without_edges(span(m, a0) & d.edges());
}

VertexSet reachable_from(const Digraph& d, VertexId from) {
  VertexSet seen{from};
  std::vector<VertexId> stack{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId id : d.out_edges(v)) {
      const VertexId h = d.edge(id).head;
      if (!seen.contains(h)) {
        seen.insert(h);
        stack.push_back(h);
      }
    }
  }
  return seen;
}

}  // namespace menger

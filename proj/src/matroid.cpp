#include "menger/matroid.hpp"

#include <bit>
#include <numeric>

#include "menger/error.hpp"

namespace menger {

bool Matroid::is_independent(const EdgeSet& s) const {
  if (!s.is_subset_of(ground_)) {
    throw PreconditionError("set " + (s - ground_).to_string() +
                            " lies outside the ground of a " + kind() +
                            " matroid");
  }
  return independent_within_ground(s);
}

namespace {

EdgeSet union_of_blocks(const std::vector<PartitionBlock>& blocks) {
  EdgeSet g;
  for (const auto& b : blocks) {
    if (g.intersects(b.edges)) {
      throw PreconditionError("partition blocks overlap");
    }
    g |= b.edges;
  }
  return g;
}

template <typename Map>
EdgeSet keys_of(const Map& map) {
  EdgeSet g;
  for (const auto& [id, value] : map) g.insert(id);
  return g;
}

EdgeSet union_of_grounds(const std::vector<MatroidPtr>& blocks) {
  EdgeSet g;
  for (const auto& b : blocks) {
    if (g.intersects(b->ground())) {
      throw PreconditionError("direct sum blocks overlap");
    }
    g |= b->ground();
  }
  return g;
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<PartitionBlock> blocks)
    : Matroid(union_of_blocks(blocks)), blocks_(std::move(blocks)) {}

bool PartitionMatroid::independent_within_ground(const EdgeSet& s) const {
  for (const auto& b : blocks_) {
    if ((s & b.edges).size() > b.capacity) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(
    std::map<EdgeId, std::pair<std::uint32_t, std::uint32_t>> aux)
    : Matroid(keys_of(aux)), aux_(std::move(aux)) {
  for (const auto& [id, uv] : aux_) {
    aux_vertices_ = std::max({aux_vertices_, uv.first + 1, uv.second + 1});
  }
}

bool GraphicMatroid::independent_within_ground(const EdgeSet& s) const {
  std::vector<std::uint32_t> parent(aux_vertices_);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t id : s) {
    const auto& [u, v] = aux_.at(static_cast<EdgeId>(id));
    const std::uint32_t ru = find(u);
    const std::uint32_t rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

LinearGF2Matroid::LinearGF2Matroid(std::map<EdgeId, std::uint64_t> columns)
    : Matroid(keys_of(columns)), columns_(std::move(columns)) {}

bool LinearGF2Matroid::independent_within_ground(const EdgeSet& s) const {
  // basis[b] holds a reduced vector whose highest set bit is b.
  std::uint64_t basis[64] = {};
  for (std::size_t id : s) {
    std::uint64_t v = columns_.at(static_cast<EdgeId>(id));
    while (v != 0) {
      const int hi = 63 - std::countl_zero(v);
      if (basis[hi] == 0) {
        basis[hi] = v;
        break;
      }
      v ^= basis[hi];
    }
    if (v == 0) return false;
  }
  return true;
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr base, const EdgeSet& keep)
    : Matroid(base->ground() & keep), base_(std::move(base)) {}

ContractedMatroid::ContractedMatroid(MatroidPtr base, const EdgeSet& contracted)
    : Matroid(base->ground() - contracted),
      base_(std::move(base)),
      contracted_(contracted) {
  if (!contracted_.is_subset_of(base_->ground())) {
    throw PreconditionError("contracted set leaves the ground");
  }
  basis_ = greedy_basis(*base_, contracted_);
}

DirectSumMatroid::DirectSumMatroid(std::vector<MatroidPtr> blocks)
    : Matroid(union_of_grounds(blocks)), blocks_(std::move(blocks)) {}

std::shared_ptr<const DirectSumMatroid> DirectSumMatroid::over_in_edges(
    const Digraph& d, const std::map<VertexId, MatroidPtr>& per_vertex) {
  std::vector<MatroidPtr> blocks;
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const EdgeSet in = d.in_edge_set(v);
    auto it = per_vertex.find(v);
    if (it == per_vertex.end() || it->second == nullptr) {
      if (!in.empty()) blocks.push_back(std::make_shared<FreeMatroid>(in));
      continue;
    }
    if (it->second->ground() != in) {
      throw PreconditionError("matroid at vertex " + std::to_string(v) +
                              " has ground " + it->second->ground().to_string() +
                              " but in-edges " + in.to_string());
    }
    blocks.push_back(it->second);
  }
  for (const auto& [v, m] : per_vertex) {
    if (v >= d.vertex_count()) {
      throw PreconditionError("matroid attached to unknown vertex " +
                              std::to_string(v));
    }
  }
  return std::make_shared<DirectSumMatroid>(std::move(blocks));
}

bool DirectSumMatroid::independent_within_ground(const EdgeSet& s) const {
  for (const auto& b : blocks_) {
    const EdgeSet part = s & b->ground();
    if (!part.empty() && !b->is_independent(part)) return false;
  }
  return true;
}

EdgeSet greedy_basis_extending(const Matroid& m, const EdgeSet& seed,
                               const EdgeSet& s) {
  EdgeSet basis = seed;
  for (std::size_t e : s) {
    if (basis.contains(e)) continue;
    EdgeSet trial = basis.with(e);
    if (m.is_independent(trial)) basis = std::move(trial);
  }
  return basis;
}

EdgeSet greedy_basis(const Matroid& m, const EdgeSet& s) {
  return greedy_basis_extending(m, EdgeSet{}, s);
}

std::size_t rank(const Matroid& m, const EdgeSet& s) {
  return greedy_basis(m, s).size();
}

bool in_span(const Matroid& m, const EdgeSet& s, EdgeId e) {
  if (!m.ground().contains(e)) {
    throw PreconditionError("element " + std::to_string(e) +
                            " is outside the ground");
  }
  if (s.contains(e)) return true;
  return !m.is_independent(greedy_basis(m, s).with(e));
}

EdgeSet span(const Matroid& m, const EdgeSet& s) {
  const EdgeSet basis = greedy_basis(m, s);
  EdgeSet out = s;
  for (std::size_t e : m.ground()) {
    if (!out.contains(e) && !m.is_independent(basis.with(e))) out.insert(e);
  }
  return out;
}

bool spans(const Matroid& m, const EdgeSet& s, const EdgeSet& target) {
  const EdgeSet basis = greedy_basis(m, s);
  for (std::size_t e : target) {
    if (s.contains(e)) continue;
    if (m.is_independent(basis.with(e))) return false;
  }
  return true;
}

EdgeSet fundamental_circuit(const Matroid& m, const EdgeSet& s, EdgeId e) {
  if (!m.is_independent(s)) {
    throw PreconditionError("fundamental_circuit: S is dependent");
  }
  const EdgeSet whole = s.with(e);
  if (m.is_independent(whole)) {
    throw PreconditionError("fundamental_circuit: S + e is independent");
  }
  EdgeSet circuit;
  for (std::size_t x : whole) {
    if (m.is_independent(whole.without(x))) circuit.insert(x);
  }
  return circuit;
}

MatroidPtr contract(const MatroidPtr& m, const EdgeSet& s) {
  return std::make_shared<ContractedMatroid>(m, s);
}

MatroidPtr restrict_to(const MatroidPtr& m, const EdgeSet& keep) {
  return std::make_shared<RestrictedMatroid>(m, keep);
}

EdgeSet matroid_loops(const Matroid& m) {
  EdgeSet loops;
  for (std::size_t e : m.ground()) {
    if (!m.is_independent(EdgeSet{e})) loops.insert(e);
  }
  return loops;
}

AxiomReport axiom_spot_check(const Matroid& m) {
  const std::vector<std::size_t> elems = m.ground().to_vector();
  const std::size_t n = elems.size();
  if (n > 12) {
    throw GuardExceeded("axiom_spot_check: ground of " + std::to_string(n) +
                        " elements exceeds 12");
  }
  const std::uint32_t full = (1U << n);
  auto to_set = [&](std::uint32_t mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.insert(elems[i]);
    }
    return s;
  };

  std::vector<char> indep(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    indep[mask] = m.is_independent(to_set(mask)) ? 1 : 0;
  }

  AxiomReport report;
  if (!indep[0]) {
    report.ok = false;
    report.axiom = "empty-set";
    report.message = "the empty set is dependent";
    return report;
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (!indep[mask]) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t sub = mask & ~(1U << i);
      if (sub != mask && !indep[sub]) {
        report.ok = false;
        report.axiom = "heredity";
        report.witness_a = to_set(mask);
        report.witness_b = to_set(sub);
        report.message = "independent " + report.witness_a.to_string() +
                         " has dependent subset " + report.witness_b.to_string();
        return report;
      }
    }
  }

  // Largest independent subset size of every subset.
  std::vector<std::uint8_t> r(full);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (indep[mask]) {
      r[mask] = static_cast<std::uint8_t>(std::popcount(mask));
      continue;
    }
    std::uint8_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) best = std::max(best, r[mask & ~(1U << i)]);
    }
    r[mask] = best;
  }

  // A hereditary family is a matroid iff each independent I is a maximum
  // independent subset of the elements that cannot be added to it.
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!indep[mask]) continue;
    std::uint32_t blocked = mask;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit = 1U << i;
      if ((mask & bit) == 0 && !indep[mask | bit]) blocked |= bit;
    }
    const auto size = static_cast<std::uint8_t>(std::popcount(mask));
    if (r[blocked] <= size) continue;
    for (std::uint32_t sub = blocked; sub != 0; sub = (sub - 1) & blocked) {
      if (indep[sub] && std::popcount(sub) == size + 1) {
        report.ok = false;
        report.axiom = "exchange";
        report.witness_a = to_set(mask);
        report.witness_b = to_set(sub);
        report.message = "no element of " + report.witness_b.to_string() +
                         " extends " + report.witness_a.to_string();
        return report;
      }
    }
  }
  return report;
}

}  // namespace menger

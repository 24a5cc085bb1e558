#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "menger/digraph.hpp"
#include "menger/id_set.hpp"

namespace menger {

/// Independence oracle on a finite ground set of edge ids.
///
/// Every derived quantity (rank, span, circuits, minors) is computed from
/// `is_independent` alone. Oracles are immutable and safe to share across
/// threads.
class Matroid {
 public:
  explicit Matroid(EdgeSet ground) : ground_(std::move(ground)) {}
  virtual ~Matroid() = default;

  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  const EdgeSet& ground() const { return ground_; }

  /// Throws PreconditionError when `s` is not inside the ground set.
  bool is_independent(const EdgeSet& s) const;

  virtual std::string kind() const = 0;

 protected:
  virtual bool independent_within_ground(const EdgeSet& s) const = 0;

 private:
  EdgeSet ground_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class FreeMatroid final : public Matroid {
 public:
  using Matroid::Matroid;
  std::string kind() const override { return "free"; }

 protected:
  bool independent_within_ground(const EdgeSet&) const override { return true; }
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(EdgeSet ground, std::size_t rank)
      : Matroid(std::move(ground)), rank_(rank) {}
  std::size_t rank_bound() const { return rank_; }
  std::string kind() const override { return "uniform"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override {
    return s.size() <= rank_;
  }

 private:
  std::size_t rank_;
};

struct PartitionBlock {
  EdgeSet edges;
  std::size_t capacity = 0;
};

/// Independent iff every block holds at most its capacity. The ground is the
/// union of the (pairwise disjoint) blocks.
class PartitionMatroid final : public Matroid {
 public:
  explicit PartitionMatroid(std::vector<PartitionBlock> blocks);
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  std::string kind() const override { return "partition"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override;

 private:
  std::vector<PartitionBlock> blocks_;
};

/// Each element names an edge of an auxiliary undirected multigraph;
/// independent iff the named edges form a forest.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(std::map<EdgeId, std::pair<std::uint32_t, std::uint32_t>> aux);
  const auto& aux_edges() const { return aux_; }
  std::string kind() const override { return "graphic"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override;

 private:
  std::map<EdgeId, std::pair<std::uint32_t, std::uint32_t>> aux_;
  std::uint32_t aux_vertices_ = 0;
};

/// Each element is a column over GF(2) packed into 64 bits; independent iff
/// the columns are linearly independent.
class LinearGF2Matroid final : public Matroid {
 public:
  explicit LinearGF2Matroid(std::map<EdgeId, std::uint64_t> columns);
  const auto& columns() const { return columns_; }
  std::string kind() const override { return "gf2"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override;

 private:
  std::map<EdgeId, std::uint64_t> columns_;
};

/// Wraps an arbitrary predicate. No axiom is enforced; see axiom_spot_check.
class PredicateMatroid final : public Matroid {
 public:
  PredicateMatroid(EdgeSet ground, std::function<bool(const EdgeSet&)> pred,
                   std::string name = "predicate")
      : Matroid(std::move(ground)), pred_(std::move(pred)), name_(std::move(name)) {}
  std::string kind() const override { return name_; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override { return pred_(s); }

 private:
  std::function<bool(const EdgeSet&)> pred_;
  std::string name_;
};

/// M restricted to a subset of its ground.
class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr base, const EdgeSet& keep);
  std::string kind() const override { return "restriction"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override {
    return base_->is_independent(s);
  }

 private:
  MatroidPtr base_;
};

/// M / S on ground \ S: T independent iff T united with a basis of S is.
class ContractedMatroid final : public Matroid {
 public:
  ContractedMatroid(MatroidPtr base, const EdgeSet& contracted);
  const EdgeSet& contracted_set() const { return contracted_; }
  const EdgeSet& contracted_basis() const { return basis_; }
  std::string kind() const override { return "contraction"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override {
    return base_->is_independent(s | basis_);
  }

 private:
  MatroidPtr base_;
  EdgeSet contracted_;
  EdgeSet basis_;
};

/// Direct sum of matroids with pairwise disjoint grounds. Independence is
/// blockwise. When built over a digraph, block v has ground in(v).
class DirectSumMatroid final : public Matroid {
 public:
  explicit DirectSumMatroid(std::vector<MatroidPtr> blocks);

  /// Per-vertex blocks; a vertex without an entry gets Free on in(v).
  /// Throws PreconditionError unless each block's ground equals in(v).
  static std::shared_ptr<const DirectSumMatroid> over_in_edges(
      const Digraph& d, const std::map<VertexId, MatroidPtr>& per_vertex);

  const std::vector<MatroidPtr>& blocks() const { return blocks_; }
  std::string kind() const override { return "direct-sum"; }

 protected:
  bool independent_within_ground(const EdgeSet& s) const override;

 private:
  std::vector<MatroidPtr> blocks_;
};

/// Size of a maximal independent subset, chosen greedily by ascending id.
std::size_t rank(const Matroid& m, const EdgeSet& s);
/// The greedy (ascending id) basis of `s`.
EdgeSet greedy_basis(const Matroid& m, const EdgeSet& s);
/// Greedy basis of `s` that extends the independent set `seed`.
EdgeSet greedy_basis_extending(const Matroid& m, const EdgeSet& seed,
                               const EdgeSet& s);
bool in_span(const Matroid& m, const EdgeSet& s, EdgeId e);
EdgeSet span(const Matroid& m, const EdgeSet& s);
/// True iff every element of `target` lies in span(s).
bool spans(const Matroid& m, const EdgeSet& s, const EdgeSet& target);
/// Unique circuit in S + e containing e. S independent, S + e dependent.
EdgeSet fundamental_circuit(const Matroid& m, const EdgeSet& s, EdgeId e);

MatroidPtr contract(const MatroidPtr& m, const EdgeSet& s);
MatroidPtr restrict_to(const MatroidPtr& m, const EdgeSet& keep);

/// Dependent singletons of M.
EdgeSet matroid_loops(const Matroid& m);

struct AxiomReport {
  bool ok = true;
  std::string axiom;    ///< "empty-set", "heredity" or "exchange" on failure
  EdgeSet witness_a;    ///< failing set (heredity: the independent superset)
  EdgeSet witness_b;    ///< second witness (heredity: dependent subset)
  std::string message;
};

/// Exhaustive check of the independence axioms; ground at most 12 elements.
AxiomReport axiom_spot_check(const Matroid& m);

}  // namespace menger

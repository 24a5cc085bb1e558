#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "menger/digraph.hpp"
#include "menger/error.hpp"
#include "menger/matroid.hpp"
#include "menger/solver.hpp"

namespace menger::io {

inline constexpr const char* kInstanceVersion = "matroid-menger/1";
inline constexpr const char* kCertificateVersion = "matroid-menger-certificate/1";

/// Malformed input document. `location` is a JSON-pointer-like path.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct FreeSpec {
  friend bool operator==(const FreeSpec&, const FreeSpec&) = default;
};
struct UniformSpec {
  std::size_t rank = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};
struct PartitionSpec {
  struct Block {
    std::vector<EdgeId> edges;
    std::size_t cap = 0;
    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};
struct Gf2Spec {
  /// Column bit strings; character i is coordinate i.
  std::map<EdgeId, std::string> columns;
  friend bool operator==(const Gf2Spec&, const Gf2Spec&) = default;
};
struct GraphicSpec {
  std::map<EdgeId, std::pair<std::uint32_t, std::uint32_t>> aux_edges;
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

using MatroidSpec = std::variant<FreeSpec, UniformSpec, PartitionSpec, Gf2Spec, GraphicSpec>;

struct EdgeRecord {
  EdgeId id = 0;
  std::string tail;
  std::string head;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Instance file contents. Vertex names map to dense ids in declaration
/// order; edges are listed by ascending id; vertices without a matroid
/// entry are free.
struct InstanceDocument {
  std::vector<std::string> vertices;
  std::vector<EdgeRecord> edges;
  std::string source;
  std::string sink;
  std::map<std::string, MatroidSpec> matroids;

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

/// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string instance_hash(const InstanceDocument& doc);

/// In-memory instance ready for the engines. Matroid loops have been
/// removed from both the digraph and the matroid.
struct Instance {
  std::vector<std::string> vertex_names;
  Digraph graph;
  std::shared_ptr<const DirectSumMatroid> matroid;
  /// Per-vertex blocks as built from the document, before loop removal.
  std::map<VertexId, MatroidPtr> raw_blocks;
  EdgeSet stripped_loops;
  std::vector<std::string> warnings;
};

Instance build_instance(const InstanceDocument& doc);
MatroidPtr build_matroid(const MatroidSpec& spec, const EdgeSet& in_edges);

struct CertificateDocument {
  std::string engine;
  std::string instance_hash;
  std::vector<std::vector<EdgeId>> paths;
  std::vector<std::string> cut;  ///< sorted vertex names
  std::vector<EdgeId> cover;
  bool verified = false;
  std::string failed_clause;
  std::vector<std::pair<std::string, bool>> transcript;

  friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument make_certificate_document(const Instance& inst,
                                              const std::string& hash,
                                              const std::string& engine,
                                              const Certificate& cert,
                                              const CertificateCheck& check);
CertificateDocument parse_certificate(const std::string& text);
std::string serialize_certificate(const CertificateDocument& doc);
/// Resolves names against `inst`; throws ParseError on unknown vertices.
Certificate to_certificate(const Instance& inst, const CertificateDocument& doc);

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t vertices = 5;
  std::size_t edges = 8;
  /// Allowed kinds: free, uniform, partition, gf2, graphic.
  std::vector<std::string> matroids{"free", "uniform", "partition"};
};

/// Seeded random instance. Byte-stable: depends only on the options.
InstanceDocument generate_instance(const GenOptions& options);

}  // namespace menger::io

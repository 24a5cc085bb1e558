#include "menger/instance_io.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include <json.hpp>

namespace menger::io {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a string");
  return j.get<std::string>();
}

std::uint64_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(where, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

EdgeId parse_edge_key(const std::string& key, const std::string& where) {
  if (key.empty() || !std::all_of(key.begin(), key.end(), ::isdigit)) {
    throw ParseError(where, "edge key '" + key + "' is not an edge id");
  }
  return static_cast<EdgeId>(std::stoul(key));
}

MatroidSpec parse_matroid(const json& j, const std::string& where) {
  const std::string type = as_string(field(j, "type", where), where + "/type");
  if (type == "free") return FreeSpec{};
  if (type == "uniform") {
    return UniformSpec{as_count(field(j, "rank", where), where + "/rank")};
  }
  if (type == "partition") {
    const json& blocks = field(j, "blocks", where);
    if (!blocks.is_array()) throw ParseError(where + "/blocks", "expected an array");
    PartitionSpec spec;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string at = where + "/blocks/" + std::to_string(i);
      PartitionSpec::Block b;
      const json& edges = field(blocks[i], "edges", at);
      if (!edges.is_array()) throw ParseError(at + "/edges", "expected an array");
      for (std::size_t k = 0; k < edges.size(); ++k) {
        b.edges.push_back(static_cast<EdgeId>(
            as_count(edges[k], at + "/edges/" + std::to_string(k))));
      }
      b.cap = as_count(field(blocks[i], "cap", at), at + "/cap");
      spec.blocks.push_back(std::move(b));
    }
    return spec;
  }
  if (type == "gf2") {
    const json& cols = field(j, "columns", where);
    if (!cols.is_object()) throw ParseError(where + "/columns", "expected an object");
    Gf2Spec spec;
    for (const auto& [key, value] : cols.items()) {
      const std::string at = where + "/columns/" + key;
      const std::string bits = as_string(value, at);
      if (bits.empty() || bits.size() > 64 ||
          bits.find_first_not_of("01") != std::string::npos) {
        throw ParseError(at, "column must be 1 to 64 characters of 0/1");
      }
      spec.columns.emplace(parse_edge_key(key, at), bits);
    }
    return spec;
  }
  if (type == "graphic") {
    const json& aux = field(j, "aux_edges", where);
    if (!aux.is_object()) throw ParseError(where + "/aux_edges", "expected an object");
    GraphicSpec spec;
    for (const auto& [key, value] : aux.items()) {
      const std::string at = where + "/aux_edges/" + key;
      if (!value.is_array() || value.size() != 2) {
        throw ParseError(at, "expected a pair of auxiliary vertices");
      }
      spec.aux_edges.emplace(
          parse_edge_key(key, at),
          std::pair{static_cast<std::uint32_t>(as_count(value[0], at + "/0")),
                    static_cast<std::uint32_t>(as_count(value[1], at + "/1"))});
    }
    return spec;
  }
  throw ParseError(where + "/type", "unknown matroid type '" + type + "'");
}

json matroid_to_json(const MatroidSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FreeSpec>) {
          return {{"type", "free"}};
        } else if constexpr (std::is_same_v<T, UniformSpec>) {
          return {{"type", "uniform"}, {"rank", s.rank}};
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          json blocks = json::array();
          for (const auto& b : s.blocks) {
            blocks.push_back({{"edges", b.edges}, {"cap", b.cap}});
          }
          return {{"type", "partition"}, {"blocks", blocks}};
        } else if constexpr (std::is_same_v<T, Gf2Spec>) {
          json cols = json::object();
          for (const auto& [id, bits] : s.columns) cols[std::to_string(id)] = bits;
          return {{"type", "gf2"}, {"columns", cols}};
        } else {
          json aux = json::object();
          for (const auto& [id, uv] : s.aux_edges) {
            aux[std::to_string(id)] = {uv.first, uv.second};
          }
          return {{"type", "graphic"}, {"aux_edges", aux}};
        }
      },
      spec);
}

EdgeSet spec_ground(const MatroidSpec& spec, const EdgeSet& in_edges) {
  return std::visit(
      [&](const auto& s) -> EdgeSet {
        using T = std::decay_t<decltype(s)>;
        EdgeSet g;
        if constexpr (std::is_same_v<T, FreeSpec> || std::is_same_v<T, UniformSpec>) {
          g = in_edges;
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          for (const auto& b : s.blocks) {
            for (EdgeId e : b.edges) g.insert(e);
          }
        } else if constexpr (std::is_same_v<T, Gf2Spec>) {
          for (const auto& [id, bits] : s.columns) g.insert(id);
        } else {
          for (const auto& [id, uv] : s.aux_edges) g.insert(id);
        }
        return g;
      },
      spec);
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("not valid JSON: ") + e.what());
  }
  InstanceDocument doc;
  const std::string version = as_string(field(j, "version", ""), "/version");
  if (version != kInstanceVersion) {
    throw ParseError("/version", "unsupported version '" + version + "'");
  }

  const json& vs = field(j, "vertices", "");
  if (!vs.is_array()) throw ParseError("/vertices", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string name = as_string(vs[i], "/vertices/" + std::to_string(i));
    if (!names.insert(name).second) {
      throw ParseError("/vertices/" + std::to_string(i), "duplicate vertex '" + name + "'");
    }
    doc.vertices.push_back(std::move(name));
  }
  auto known = [&](const std::string& name, const std::string& where) {
    if (!names.contains(name)) {
      throw ParseError(where, "dangling vertex '" + name + "'");
    }
    return name;
  };

  const json& es = field(j, "edges", "");
  if (!es.is_array()) throw ParseError("/edges", "expected an array");
  std::set<EdgeId> ids;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string at = "/edges/" + std::to_string(i);
    EdgeRecord r;
    r.id = static_cast<EdgeId>(as_count(field(es[i], "id", at), at + "/id"));
    if (!ids.insert(r.id).second) {
      throw ParseError(at + "/id", "duplicate edge id " + std::to_string(r.id));
    }
    r.tail = known(as_string(field(es[i], "tail", at), at + "/tail"), at + "/tail");
    r.head = known(as_string(field(es[i], "head", at), at + "/head"), at + "/head");
    doc.edges.push_back(std::move(r));
  }
  if (!ids.empty() && *ids.rbegin() + 1 != ids.size()) {
    throw ParseError("/edges", "edge ids must be exactly 0.." + std::to_string(ids.size() - 1));
  }
  std::sort(doc.edges.begin(), doc.edges.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });

  doc.source = known(as_string(field(j, "s", ""), "/s"), "/s");
  doc.sink = known(as_string(field(j, "t", ""), "/t"), "/t");
  if (doc.source == doc.sink) throw ParseError("/t", "s and t must differ");

  if (auto it = j.find("matroids"); it != j.end()) {
    if (!it->is_object()) throw ParseError("/matroids", "expected an object");
    for (const auto& [name, spec] : it->items()) {
      const std::string at = "/matroids/" + name;
      known(name, at);
      doc.matroids.emplace(name, parse_matroid(spec, at));
    }
  }

  // Referential check of every matroid ground against the in-edges.
  for (const auto& [name, spec] : doc.matroids) {
    EdgeSet in;
    for (const EdgeRecord& r : doc.edges) {
      if (r.head == name) in.insert(r.id);
    }
    const std::string at = "/matroids/" + name;
    if (const auto* p = std::get_if<PartitionSpec>(&spec)) {
      EdgeSet seen;
      for (const auto& b : p->blocks) {
        for (EdgeId e : b.edges) {
          if (seen.contains(e)) throw ParseError(at, "edge " + std::to_string(e) + " in two blocks");
          seen.insert(e);
        }
      }
    }
    const EdgeSet ground = spec_ground(spec, in);
    if (EdgeSet missing = in - ground; !missing.empty()) {
      throw ParseError(at, "uncovered in-edge " + std::to_string(missing.front()) +
                               " of vertex '" + name + "'");
    }
    if (EdgeSet extra = ground - in; !extra.empty()) {
      throw ParseError(at, "matroid ground mismatch: edge " +
                               std::to_string(extra.front()) + " does not enter '" +
                               name + "'");
    }
  }
  return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
  json j;
  j["version"] = kInstanceVersion;
  j["vertices"] = doc.vertices;
  json edges = json::array();
  for (const EdgeRecord& r : doc.edges) {
    edges.push_back({{"id", r.id}, {"tail", r.tail}, {"head", r.head}});
  }
  j["edges"] = edges;
  j["s"] = doc.source;
  j["t"] = doc.sink;
  json ms = json::object();
  for (const auto& [name, spec] : doc.matroids) ms[name] = matroid_to_json(spec);
  j["matroids"] = ms;
  return j.dump(2) + "\n";
}

std::string instance_hash(const InstanceDocument& doc) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_instance(doc)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

MatroidPtr build_matroid(const MatroidSpec& spec, const EdgeSet& in_edges) {
  return std::visit(
      [&](const auto& s) -> MatroidPtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FreeSpec>) {
          return std::make_shared<FreeMatroid>(in_edges);
        } else if constexpr (std::is_same_v<T, UniformSpec>) {
          return std::make_shared<UniformMatroid>(in_edges, s.rank);
        } else if constexpr (std::is_same_v<T, PartitionSpec>) {
          std::vector<PartitionBlock> blocks;
          for (const auto& b : s.blocks) {
            blocks.push_back({EdgeSet(b.edges.begin(), b.edges.end()), b.cap});
          }
          return std::make_shared<PartitionMatroid>(std::move(blocks));
        } else if constexpr (std::is_same_v<T, Gf2Spec>) {
          std::map<EdgeId, std::uint64_t> cols;
          for (const auto& [id, bits] : s.columns) {
            std::uint64_t v = 0;
            for (std::size_t i = 0; i < bits.size(); ++i) {
              if (bits[i] == '1') v |= std::uint64_t{1} << i;
            }
            cols.emplace(id, v);
          }
          return std::make_shared<LinearGF2Matroid>(std::move(cols));
        } else {
          return std::make_shared<GraphicMatroid>(s.aux_edges);
        }
      },
      spec);
}

Instance build_instance(const InstanceDocument& doc) {
  Instance inst;
  inst.vertex_names = doc.vertices;
  std::map<std::string, VertexId> index;
  for (std::size_t i = 0; i < doc.vertices.size(); ++i) {
    index.emplace(doc.vertices[i], static_cast<VertexId>(i));
  }
  std::vector<Edge> edges;
  for (const EdgeRecord& r : doc.edges) {
    edges.push_back(Edge{r.id, index.at(r.tail), index.at(r.head)});
  }
  const Digraph full(doc.vertices.size(), index.at(doc.source), index.at(doc.sink),
                     std::move(edges));

  for (const auto& [name, spec] : doc.matroids) {
    const VertexId v = index.at(name);
    inst.raw_blocks.emplace(v, build_matroid(spec, full.in_edge_set(v)));
  }
  std::map<VertexId, MatroidPtr> blocks;
  for (const auto& [v, block] : inst.raw_blocks) {
    const EdgeSet loops = matroid_loops(*block);
    if (loops.empty()) {
      blocks.emplace(v, block);
      continue;
    }
    for (std::size_t e : loops) {
      inst.warnings.push_back("edge " + std::to_string(e) + " is a loop of the matroid at '" +
                              doc.vertices[v] + "' and was removed");
    }
    inst.stripped_loops |= loops;
    blocks.emplace(v, restrict_to(block, block->ground() - loops));
  }
  inst.graph = full.without_edges(inst.stripped_loops);
  inst.matroid = DirectSumMatroid::over_in_edges(inst.graph, blocks);
  return inst;
}

CertificateDocument make_certificate_document(const Instance& inst,
                                              const std::string& hash,
                                              const std::string& engine,
                                              const Certificate& cert,
                                              const CertificateCheck& check) {
  CertificateDocument doc;
  doc.engine = engine;
  doc.instance_hash = hash;
  for (const Path& p : cert.paths) doc.paths.push_back(p.edges);
  for (std::size_t v : cert.cut) doc.cut.push_back(inst.vertex_names.at(v));
  std::sort(doc.cut.begin(), doc.cut.end());
  for (std::size_t e : cert.cover) doc.cover.push_back(static_cast<EdgeId>(e));
  doc.verified = check.ok;
  doc.failed_clause = check.clause;
  doc.transcript = check.transcript;
  return doc;
}

std::string serialize_certificate(const CertificateDocument& doc) {
  json j;
  j["version"] = kCertificateVersion;
  j["engine"] = doc.engine;
  j["instance_hash"] = doc.instance_hash;
  j["paths"] = doc.paths;
  j["cut"] = doc.cut;
  j["cover"] = doc.cover;
  json transcript = json::array();
  for (const auto& [clause, passed] : doc.transcript) {
    transcript.push_back({{"clause", clause}, {"passed", passed}});
  }
  j["verification"] = {{"ok", doc.verified},
                       {"failed_clause", doc.failed_clause},
                       {"transcript", transcript}};
  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("not valid JSON: ") + e.what());
  }
  const std::string version = as_string(field(j, "version", ""), "/version");
  if (version != kCertificateVersion) {
    throw ParseError("/version", "unsupported version '" + version + "'");
  }
  CertificateDocument doc;
  doc.engine = as_string(field(j, "engine", ""), "/engine");
  doc.instance_hash = as_string(field(j, "instance_hash", ""), "/instance_hash");
  const json& paths = field(j, "paths", "");
  if (!paths.is_array()) throw ParseError("/paths", "expected an array");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string at = "/paths/" + std::to_string(i);
    if (!paths[i].is_array()) throw ParseError(at, "expected an array");
    std::vector<EdgeId> p;
    for (std::size_t k = 0; k < paths[i].size(); ++k) {
      p.push_back(static_cast<EdgeId>(as_count(paths[i][k], at + "/" + std::to_string(k))));
    }
    doc.paths.push_back(std::move(p));
  }
  const json& cut = field(j, "cut", "");
  if (!cut.is_array()) throw ParseError("/cut", "expected an array");
  for (std::size_t i = 0; i < cut.size(); ++i) {
    doc.cut.push_back(as_string(cut[i], "/cut/" + std::to_string(i)));
  }
  const json& cover = field(j, "cover", "");
  if (!cover.is_array()) throw ParseError("/cover", "expected an array");
  for (std::size_t i = 0; i < cover.size(); ++i) {
    doc.cover.push_back(static_cast<EdgeId>(as_count(cover[i], "/cover/" + std::to_string(i))));
  }
  if (auto it = j.find("verification"); it != j.end() && it->is_object()) {
    doc.verified = it->value("ok", false);
    doc.failed_clause = it->value("failed_clause", std::string{});
    if (auto tr = it->find("transcript"); tr != it->end() && tr->is_array()) {
      for (const json& entry : *tr) {
        doc.transcript.emplace_back(entry.value("clause", std::string{}),
                                    entry.value("passed", false));
      }
    }
  }
  return doc;
}

Certificate to_certificate(const Instance& inst, const CertificateDocument& doc) {
  Certificate cert;
  for (const auto& p : doc.paths) cert.paths.push_back(Path{p});
  for (std::size_t i = 0; i < doc.cut.size(); ++i) {
    auto it = std::find(inst.vertex_names.begin(), inst.vertex_names.end(), doc.cut[i]);
    if (it == inst.vertex_names.end()) {
      throw ParseError("/cut/" + std::to_string(i), "unknown vertex '" + doc.cut[i] + "'");
    }
    cert.cut.insert(static_cast<std::size_t>(it - inst.vertex_names.begin()));
  }
  for (EdgeId e : doc.cover) cert.cover.insert(e);
  return cert;
}

namespace {

/// Bounded draws taken directly from the engine output.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

InstanceDocument generate_instance(const GenOptions& options) {
  if (options.vertices < 2) throw PreconditionError("gen: need at least 2 vertices");
  static const std::set<std::string> kKinds{"free", "uniform", "partition", "gf2", "graphic"};
  std::vector<std::string> special;
  for (const std::string& k : options.matroids) {
    if (!kKinds.contains(k)) throw PreconditionError("gen: unknown matroid kind '" + k + "'");
    if (k != "free" && std::find(special.begin(), special.end(), k) == special.end()) {
      special.push_back(k);
    }
  }

  StableRng rng(options.seed);
  InstanceDocument doc;
  doc.vertices.push_back("s");
  for (std::size_t i = 1; i + 1 < options.vertices; ++i) {
    doc.vertices.push_back("v" + std::to_string(i));
  }
  doc.vertices.push_back("t");
  doc.source = "s";
  doc.sink = "t";
  const std::size_t n = options.vertices;
  for (std::size_t i = 0; i < options.edges; ++i) {
    const std::size_t tail = rng.below(n);
    const std::size_t head = rng.below(n);
    doc.edges.push_back(EdgeRecord{static_cast<EdgeId>(i), doc.vertices[tail],
                                   doc.vertices[head]});
  }

  for (const std::string& name : doc.vertices) {
    std::vector<EdgeId> in;
    for (const EdgeRecord& r : doc.edges) {
      if (r.head == name) in.push_back(r.id);
    }
    if (in.empty() || special.empty()) continue;
    if (rng.below(10) >= 3) continue;
    const std::string& kind = special[rng.below(special.size())];
    const std::size_t d = in.size();
    if (kind == "uniform") {
      doc.matroids.emplace(name, UniformSpec{1 + rng.below(std::max<std::size_t>(1, d - 1))});
    } else if (kind == "partition") {
      const std::size_t count = 1 + rng.below(std::min<std::size_t>(d, 3));
      std::vector<PartitionSpec::Block> blocks(count);
      for (EdgeId e : in) blocks[rng.below(count)].edges.push_back(e);
      PartitionSpec spec;
      for (auto& b : blocks) {
        if (b.edges.empty()) continue;
        b.cap = 1 + rng.below(b.edges.size());
        spec.blocks.push_back(std::move(b));
      }
      doc.matroids.emplace(name, std::move(spec));
    } else if (kind == "gf2") {
      const std::size_t dim = 1 + rng.below(4);
      Gf2Spec spec;
      for (EdgeId e : in) {
        const std::uint64_t v = 1 + rng.below((std::uint64_t{1} << dim) - 1);
        std::string bits(dim, '0');
        for (std::size_t b = 0; b < dim; ++b) {
          if ((v >> b) & 1U) bits[b] = '1';
        }
        spec.columns.emplace(e, bits);
      }
      doc.matroids.emplace(name, std::move(spec));
    } else {
      const std::uint64_t aux = 2 + rng.below(3);
      GraphicSpec spec;
      for (EdgeId e : in) {
        const auto u = static_cast<std::uint32_t>(rng.below(aux));
        auto v = static_cast<std::uint32_t>(rng.below(aux - 1));
        if (v >= u) ++v;
        spec.aux_edges.emplace(e, std::pair{u, v});
      }
      doc.matroids.emplace(name, std::move(spec));
    }
  }
  return doc;
}

}  // namespace menger::io

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "menger/instance_io.hpp"
#include "menger/solver.hpp"

namespace menger::io {
namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(MENGER_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string flag_with(const std::string& from, const std::string& to) {
  std::string text = read("flag.json");
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

std::string location_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.location() + " | " + e.what();
  }
  return "no error";
}

TEST(ParseInstance, Flag) {
  const InstanceDocument doc = parse_instance(read("flag.json"));
  EXPECT_EQ(doc.vertices, (std::vector<std::string>{"s", "a", "b", "c", "t"}));
  EXPECT_EQ(doc.edges.size(), 6u);
  ASSERT_EQ(doc.matroids.count("t"), 1u);
  const auto* gf2 = std::get_if<Gf2Spec>(&doc.matroids.at("t"));
  ASSERT_NE(gf2, nullptr);
  EXPECT_EQ(gf2->columns.at(5), "01");

  const Instance inst = build_instance(doc);
  EXPECT_EQ(inst.graph.edge_count(), 6u);
  EXPECT_EQ(inst.graph.source(), 0u);
  EXPECT_EQ(inst.graph.sink(), 4u);
  EXPECT_FALSE(inst.matroid->is_independent(EdgeSet{3, 4}));
  EXPECT_TRUE(inst.matroid->is_independent(EdgeSet{3, 5}));
  EXPECT_TRUE(inst.warnings.empty());
}

TEST(ParseInstance, RoundTrip) {
  const InstanceDocument doc = parse_instance(read("flag.json"));
  EXPECT_EQ(parse_instance(serialize_instance(doc)), doc);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const InstanceDocument g = generate_instance(
        {seed, 6, 10, {"free", "uniform", "partition", "gf2", "graphic"}});
    const std::string text = serialize_instance(g);
    ASSERT_EQ(parse_instance(text), g);
    ASSERT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(ParseInstance, UncoveredInEdge) {
  const std::string text =
      flag_with("{\"3\": \"10\", \"4\": \"10\", \"5\": \"01\"}", "{\"3\": \"10\", \"5\": \"01\"}");
  const std::string r = location_of(text);
  EXPECT_NE(r.find("uncovered in-edge"), std::string::npos) << r;
  EXPECT_EQ(r.substr(0, r.find(' ')), "/matroids/t");
}

TEST(ParseInstance, EmptyEdgeList) {
  const InstanceDocument doc = parse_instance(
      R"({"version":"matroid-menger/1","vertices":["s","t"],"edges":[],"s":"s","t":"t"})");
  const Instance inst = build_instance(doc);
  EXPECT_EQ(inst.graph.edge_count(), 0u);
  EXPECT_TRUE(solve(inst.graph, *inst.matroid).paths.empty());
}

TEST(ParseInstance, Errors) {
  EXPECT_NE(location_of("{").find("not valid JSON"), std::string::npos);
  EXPECT_NE(location_of(flag_with("matroid-menger/1", "other/2")).find("/version"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"({"id": 1, "tail": "s")", R"({"id": 0, "tail": "s")"))
                .find("duplicate edge id"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"({"id": 5,)", R"({"id": 7,)")).find("edge ids must be"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("tail": "c")", R"("tail": "zz")")).find("dangling vertex"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("s": "s")", R"("s": "t")")).find("must differ"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("type": "gf2")", R"("type": "weird")"))
                .find("unknown matroid type"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("5": "01")", R"("5": "0x")")).find("0/1"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("5": "01")", R"("5": "01", "0": "11")"))
                .find("ground mismatch"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("vertices": ["s", "a")", R"("vertices": ["s", "s")"))
                .find("duplicate vertex"),
            std::string::npos);
  EXPECT_NE(location_of(flag_with(R"("t": {"type")", R"("q": {"type")")).find("dangling"),
            std::string::npos);
}

TEST(ParseInstance, PartitionAndGraphicSpecs) {
  const std::string text = R"({"version":"matroid-menger/1","vertices":["s","t"],
    "edges":[{"id":0,"tail":"s","head":"t"},{"id":1,"tail":"s","head":"t"},
             {"id":2,"tail":"s","head":"t"}],
    "s":"s","t":"t",
    "matroids":{"t":{"type":"partition","blocks":[{"edges":[0,1],"cap":1},{"edges":[2],"cap":1}]}}})";
  const Instance inst = build_instance(parse_instance(text));
  EXPECT_EQ(solve(inst.graph, *inst.matroid).paths.size(), 2u);

  std::string overlap = text;
  overlap.replace(overlap.find("[2]"), 3, "[1,2]");
  EXPECT_NE(location_of(overlap).find("two blocks"), std::string::npos);

  const std::string graphic = R"({"version":"matroid-menger/1","vertices":["s","t"],
    "edges":[{"id":0,"tail":"s","head":"t"},{"id":1,"tail":"s","head":"t"},
             {"id":2,"tail":"s","head":"t"}],
    "s":"s","t":"t",
    "matroids":{"t":{"type":"graphic","aux_edges":{"0":[0,1],"1":[1,2],"2":[0,2]}}}})";
  const Instance g = build_instance(parse_instance(graphic));
  EXPECT_EQ(solve(g.graph, *g.matroid).paths.size(), 2u);
}

TEST(BuildInstance, MatroidLoopsAreStripped) {
  const std::string text = R"({"version":"matroid-menger/1","vertices":["s","t"],
    "edges":[{"id":0,"tail":"s","head":"t"},{"id":1,"tail":"s","head":"t"}],
    "s":"s","t":"t",
    "matroids":{"t":{"type":"gf2","columns":{"0":"00","1":"10"}}}})";
  const Instance inst = build_instance(parse_instance(text));
  EXPECT_EQ(inst.stripped_loops, (EdgeSet{0}));
  EXPECT_FALSE(inst.graph.has_edge(0));
  ASSERT_EQ(inst.warnings.size(), 1u);
  EXPECT_NE(inst.warnings[0].find("loop"), std::string::npos);
  EXPECT_EQ(solve(inst.graph, *inst.matroid).paths, (PathSystem{Path{{1}}}));
}

TEST(Certificate, RoundTripAndResolve) {
  const InstanceDocument doc = parse_instance(read("flag.json"));
  const Instance inst = build_instance(doc);
  const Certificate cert = solve(inst.graph, *inst.matroid);
  const CertificateCheck check = verify_certificate(inst.graph, *inst.matroid, cert);
  const CertificateDocument cd =
      make_certificate_document(inst, instance_hash(doc), "solve", cert, check);
  EXPECT_EQ(cd.cut, (std::vector<std::string>{"a", "b", "c", "t"}));
  EXPECT_EQ(cd.cover, (std::vector<EdgeId>{0, 1}));
  EXPECT_TRUE(cd.verified);
  const CertificateDocument back = parse_certificate(serialize_certificate(cd));
  EXPECT_EQ(back, cd);
  EXPECT_EQ(to_certificate(inst, back), cert);

  CertificateDocument bad = cd;
  bad.cut.push_back("nowhere");
  EXPECT_THROW(to_certificate(inst, bad), ParseError);
  EXPECT_THROW(parse_certificate("{\"version\":\"x\"}"), ParseError);
}

TEST(InstanceHash, StableAndSensitive) {
  const InstanceDocument doc = parse_instance(read("flag.json"));
  EXPECT_EQ(instance_hash(doc), instance_hash(parse_instance(serialize_instance(doc))));
  EXPECT_EQ(instance_hash(doc).size(), 16u);
  InstanceDocument other = doc;
  other.edges[2].head = "t";
  EXPECT_NE(instance_hash(doc), instance_hash(other));
}

TEST(Generate, SeededAndValid) {
  const GenOptions opt{7, 5, 8, {"free", "uniform", "partition"}};
  EXPECT_EQ(serialize_instance(generate_instance(opt)), serialize_instance(generate_instance(opt)));
  EXPECT_NE(serialize_instance(generate_instance(opt)),
            serialize_instance(generate_instance({8, 5, 8, {"free", "uniform", "partition"}})));
  std::size_t non_free = 0, vertices_with_in = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const InstanceDocument doc =
        generate_instance({seed, 7, 12, {"free", "uniform", "partition", "gf2", "graphic"}});
    ASSERT_EQ(doc.vertices.size(), 7u);
    ASSERT_EQ(doc.edges.size(), 12u);
    ASSERT_NO_THROW(parse_instance(serialize_instance(doc)));
    ASSERT_NO_THROW(build_instance(doc));
    non_free += doc.matroids.size();
    for (const std::string& v : doc.vertices) {
      for (const EdgeRecord& e : doc.edges) {
        if (e.head == v) {
          ++vertices_with_in;
          break;
        }
      }
    }
  }
  const double share = static_cast<double>(non_free) / static_cast<double>(vertices_with_in);
  EXPECT_GT(share, 0.25);
  EXPECT_LT(share, 0.35);
  EXPECT_THROW(generate_instance({1, 1, 2, {"free"}}), PreconditionError);
  EXPECT_THROW(generate_instance({1, 3, 2, {"matrix"}}), PreconditionError);
}

TEST(Generate, FreeOnlyHasNoMatroids) {
  EXPECT_TRUE(generate_instance({3, 6, 10, {"free"}}).matroids.empty());
}

}  // namespace
}  // namespace menger::io

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "menger/error.hpp"
#include "menger/instance_io.hpp"
#include "menger/matroid.hpp"
#include "menger/oracle.hpp"
#include "menger/solver.hpp"
#include "menger/waves.hpp"

namespace {

using nlohmann::json;
using namespace menger;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kGuard = 3, kInternal = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw io::ParseError(out_path, "cannot write file");
  out << text;
}

int report_error(const char* kind, const std::string& message,
                 const std::string& location, int code) {
  json err = {{"kind", kind}, {"message", message}};
  if (!location.empty()) err["location"] = location;
  std::cout << json{{"error", err}}.dump(2) << "\n";
  return code;
}

struct Loaded {
  io::InstanceDocument doc;
  io::Instance inst;
  std::string hash;
};

Loaded load(const std::string& path) {
  Loaded l;
  try {
    l.doc = io::parse_instance(read_file(path));
  } catch (const io::ParseError& e) {
    throw io::ParseError(path + ":" + e.location(), e.what());
  }
  l.inst = io::build_instance(l.doc);
  l.hash = io::instance_hash(l.doc);
  for (const std::string& w : l.inst.warnings) std::cerr << "warning: " << w << "\n";
  return l;
}

json names(const io::Instance& inst, const VertexSet& set) {
  std::vector<std::string> out;
  for (std::size_t v : set) out.push_back(inst.vertex_names.at(v));
  std::sort(out.begin(), out.end());
  return out;
}

json paths_json(const PathSystem& ps) {
  json out = json::array();
  for (const Path& p : ps) out.push_back(p.edges);
  return out;
}

int run_solve(const std::string& path, const std::string& out, bool proof) {
  Loaded l = load(path);
  Certificate cert;
  if (proof) {
    const Guards guards = Guards::from_env();
    cert = proof_solve(l.inst.graph, l.inst.matroid,
                       ProofSolveOptions{guards.proof_vertices, guards.proof_edges});
  } else {
    cert = solve(l.inst.graph, *l.inst.matroid);
  }
  const CertificateCheck check = verify_certificate(l.inst.graph, *l.inst.matroid, cert);
  emit(io::serialize_certificate(io::make_certificate_document(
           l.inst, l.hash, proof ? "proof-solve" : "solve", cert, check)),
       out);
  return check.ok ? kOk : kInternal;
}

int run_verify(const std::string& instance_path, const std::string& cert_path) {
  Loaded l = load(instance_path);
  io::CertificateDocument doc;
  try {
    doc = io::parse_certificate(read_file(cert_path));
  } catch (const io::ParseError& e) {
    throw io::ParseError(cert_path + ":" + e.location(), e.what());
  }
  CertificateCheck check;
  if (doc.instance_hash != l.hash) {
    check.ok = false;
    check.clause = "instance-hash";
    check.detail = "certificate was issued for instance " + doc.instance_hash +
                   ", not " + l.hash;
    check.transcript.emplace_back("instance-hash", false);
  } else {
    check = verify_certificate(l.inst.graph, *l.inst.matroid, io::to_certificate(l.inst, doc));
    check.transcript.insert(check.transcript.begin(), {"instance-hash", true});
  }
  json transcript = json::array();
  for (const auto& [clause, passed] : check.transcript) {
    transcript.push_back({{"clause", clause}, {"passed", passed}});
  }
  json out = {{"ok", check.ok}, {"engine", doc.engine}, {"transcript", transcript}};
  if (!check.ok) {
    out["clause"] = check.clause;
    out["detail"] = check.detail;
  }
  std::cout << out.dump(2) << "\n";
  return check.ok ? kOk : kVerifyFailed;
}

json oracle_report(const std::string& path) {
  Loaded l = load(path);
  const Guards guards = Guards::from_env();
  const OracleReport r = check_duality(l.inst.graph, *l.inst.matroid, guards);
  return {{"instance", path},
          {"instance_hash", l.hash},
          {"max_paths", r.max_paths},
          {"min_cut_rank", r.min_cut_rank},
          {"argmax", paths_json(r.argmax)},
          {"argmin", names(l.inst, r.argmin)},
          {"duality_holds", r.duality_holds}};
}

int run_oracle(const std::vector<std::string>& paths, bool batch) {
  if (!batch) {
    if (paths.size() != 1) {
      return report_error("usage", "oracle takes one instance unless --batch is given", "",
                          kInputError);
    }
    const json r = oracle_report(paths.front());
    std::cout << r.dump(2) << "\n";
    return r["duality_holds"].get<bool>() ? kOk : kVerifyFailed;
  }
  json all = json::array();
  bool holds = true;
  for (const std::string& p : paths) {
    json r = oracle_report(p);
    holds = holds && r["duality_holds"].get<bool>();
    all.push_back(std::move(r));
  }
  std::cout << all.dump(2) << "\n";
  return holds ? kOk : kVerifyFailed;
}

json axiom_json(const std::string& scope, const Matroid& m) {
  json r = {{"scope", scope}, {"kind", m.kind()}, {"ground_size", m.ground().size()}};
  if (m.ground().size() > 12) {
    r["status"] = "skipped";
    r["message"] = "ground larger than 12 elements";
    return r;
  }
  const AxiomReport a = axiom_spot_check(m);
  r["status"] = a.ok ? "pass" : "fail";
  if (!a.ok) {
    r["axiom"] = a.axiom;
    r["witness_a"] = a.witness_a.to_vector();
    r["witness_b"] = a.witness_b.to_vector();
    r["message"] = a.message;
  }
  return r;
}

int run_axioms(const std::string& path) {
  Loaded l = load(path);
  json results = json::array();
  bool ok = true;
  for (const auto& [v, block] : l.inst.raw_blocks) {
    json r = axiom_json("vertex " + l.inst.vertex_names.at(v), *block);
    ok = ok && r["status"] != "fail";
    results.push_back(std::move(r));
  }
  json r = axiom_json("direct sum", *l.inst.matroid);
  ok = ok && r["status"] != "fail";
  results.push_back(std::move(r));
  std::cout << json{{"ok", ok}, {"checks", results}}.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid-constrained edge-disjoint paths with certificates"};
  app.require_subcommand(1);

  std::string instance, certificate, out;
  auto* solve_cmd = app.add_subcommand("solve", "Solve by augmenting walks");
  solve_cmd->add_option("instance", instance, "Instance JSON")->required();
  solve_cmd->add_option("--out", out, "Write the certificate here");

  auto* proof_cmd = app.add_subcommand("proof-solve", "Solve by waves and arborescences");
  proof_cmd->add_option("instance", instance, "Instance JSON")->required();
  proof_cmd->add_option("--out", out, "Write the certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  verify_cmd->add_option("instance", instance, "Instance JSON")->required();
  verify_cmd->add_option("certificate", certificate, "Certificate JSON")->required();

  std::vector<std::string> oracle_inputs;
  bool batch = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force max paths and min cut rank");
  oracle_cmd->add_option("instances", oracle_inputs, "Instance JSON files")->required();
  oracle_cmd->add_flag("--batch", batch, "Accept several instances; emit a JSON array");

  io::GenOptions gen;
  std::string kinds = "free,uniform,partition";
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--vertices", gen.vertices, "Vertex count (at least 2)");
  gen_cmd->add_option("--edges", gen.edges, "Edge count");
  gen_cmd->add_option("--matroids", kinds, "Comma-separated kinds");
  gen_cmd->add_option("--out", out, "Write the instance here");

  auto* axioms_cmd = app.add_subcommand("axioms", "Exhaustive matroid axiom check");
  axioms_cmd->add_option("instance", instance, "Instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), "", kInputError);
  }

  try {
    if (*solve_cmd) return run_solve(instance, out, false);
    if (*proof_cmd) return run_solve(instance, out, true);
    if (*verify_cmd) return run_verify(instance, certificate);
    if (*oracle_cmd) return run_oracle(oracle_inputs, batch);
    if (*axioms_cmd) return run_axioms(instance);
    if (*gen_cmd) {
      gen.matroids.clear();
      std::stringstream ss(kinds);
      for (std::string k; std::getline(ss, k, ',');) {
        if (!k.empty()) gen.matroids.push_back(k);
      }
      emit(io::serialize_instance(io::generate_instance(gen)), out);
      return kOk;
    }
  } catch (const io::ParseError& e) {
    return report_error("input", e.what(), e.location(), kInputError);
  } catch (const PreconditionError& e) {
    return report_error("input", e.what(), "", kInputError);
  } catch (const GuardExceeded& e) {
    return report_error("guard", e.what(), "", kGuard);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), "", kInternal);
  }
  return kOk;
}

#include <atomic>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "isorel/catalog.hpp"
#include "isorel/decompose.hpp"
#include "isorel/duality.hpp"
#include "isorel/invariants.hpp"
#include "isorel/json_io.hpp"

namespace {

using namespace isorel;

// Exit codes: 0 ok, 1 malformed input, 2 not (co)isotropic / bad operands,
// 3 verification failure, 70 internal invariant breakage.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotIsotropic = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitInternal = 70;

Json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw isorel::ParseError(path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw isorel::ParseError(path + ": " + e.what());
  }
}

RelationDocument load_document(const std::string& path) {
  try {
    return parse_relation_document(read_json_input(path));
  } catch (const std::invalid_argument& e) {
    // Structural defects surfaced by the core constructors count as parse errors.
    throw isorel::ParseError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text;
}

const char* flavor_label(Flavor f) {
  return f == Flavor::presymplectic ? "presymplectic" : "poisson";
}

bool relation_admissible(const LinearRelation& f) {
  return f.target.flavor == Flavor::presymplectic ? is_isotropic(f) : is_coisotropic(f);
}

// Invariants are defined on the presymplectic side; coisotropic input is read
// through its annihilator.
LinearRelation presymplectic_view(const LinearRelation& f) {
  return f.target.flavor == Flavor::poisson ? annihilator(f) : f;
}

MultiplicityVector parse_mult_spec(const std::string& spec) {
  MultiplicityVector n{};
  std::vector<std::string> tokens;
  std::string cur;
  for (const char c : spec) {
    if (c == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  tokens.push_back(cur);
  const auto count_of = [&spec](const std::string& text) {
    try {
      std::size_t used = 0;
      const long v = std::stol(text, &used);
      if (used != text.size() || v < 0) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw isorel::ParseError("multiplicities: \"" + spec + "\": bad count \"" + text + "\"");
    }
  };
  if (spec.find(':') != std::string::npos) {
    for (const std::string& t : tokens) {
      const std::size_t colon = t.find(':');
      if (colon == std::string::npos)
        throw isorel::ParseError("multiplicities: expected LABEL:COUNT, got \"" + t + "\"");
      const auto tag = tag_from_label(t.substr(0, colon));
      if (!tag)
        throw isorel::ParseError("multiplicities: unknown type label \"" + t.substr(0, colon) +
                                 "\"");
      n.n[tag_index(*tag)] += count_of(t.substr(colon + 1));
    }
    return n;
  }
  if (tokens.size() != static_cast<std::size_t>(kTypeCount))
    throw isorel::ParseError("multiplicities: expected 13 comma-separated counts or LABEL:COUNT pairs");
  for (int t = 0; t < kTypeCount; ++t) n.n[t] = count_of(tokens[static_cast<std::size_t>(t)]);
  return n;
}

Flavor parse_kind(const std::string& kind) {
  if (kind == "presymplectic") return Flavor::presymplectic;
  if (kind == "poisson") return Flavor::poisson;
  throw isorel::ParseError("--kind: expected \"presymplectic\" or \"poisson\"");
}

Json multiplicities_report(const MultiplicityVector& n) {
  Json mult = Json::array();
  for (int t = 0; t < kTypeCount; ++t) mult.push_back(n.n[t]);
  Json types = Json::array();
  for (int t = 0; t < kTypeCount; ++t) {
    if (n.n[t] == 0) continue;
    const TypeDescriptor& d = type_descriptor(tag_from_index(t));
    Json entry = Json::object();
    entry["label"] = d.label;
    entry["name"] = d.name;
    entry["count"] = n.n[t];
    types.push_back(std::move(entry));
  }
  Json out = Json::object();
  out["multiplicities"] = std::move(mult);
  out["types"] = std::move(types);
  return out;
}

int run_validate(const std::string& input, bool require, const std::string& out_path) {
  const RelationDocument doc = load_document(input);
  const LinearRelation& f = doc.relation;
  const bool admissible = relation_admissible(f);
  Json out = Json::object();
  out["valid"] = true;
  out["kind"] = flavor_label(f.target.flavor);
  out["target_dim"] = f.target.dim;
  out["source_dim"] = f.source.dim;
  out["graph_dim"] = f.graph.dim();
  out[f.target.flavor == Flavor::presymplectic ? "isotropic" : "coisotropic"] = admissible;
  emit(out, out_path);
  return (require && !admissible) ? kExitNotIsotropic : kExitOk;
}

int run_invariants(const std::string& input, const std::string& out_path) {
  const RelationDocument doc = load_document(input);
  const InvariantVector k = compute_invariants(presymplectic_view(doc.relation));
  Json arr = Json::array();
  for (int i = 0; i < 13; ++i) arr.push_back(k.k[i]);
  Json out = Json::object();
  out["kind"] = flavor_label(doc.relation.target.flavor);
  out["invariants"] = std::move(arr);
  emit(out, out_path);
  return kExitOk;
}

int run_multiplicities(const std::string& input, const std::string& out_path) {
  const RelationDocument doc = load_document(input);
  const MultiplicityVector n =
      multiplicities(compute_invariants(presymplectic_view(doc.relation)));
  Json out = Json::object();
  out["kind"] = flavor_label(doc.relation.target.flavor);
  const Json report = multiplicities_report(n);
  for (const auto& [key, value] : report.items()) out[key] = value;
  emit(out, out_path);
  return kExitOk;
}

int run_decompose(const std::vector<std::string>& inputs, const std::string& out_path,
                  unsigned jobs) {
  if (inputs.size() == 1 && !std::filesystem::is_directory(out_path)) {
    const RelationDocument doc = load_document(inputs.front());
    const DecompositionCertificate cert = decompose(doc.relation);
    emit(certificate_to_json(cert), out_path);
    return kExitOk;
  }
  if (out_path.empty())
    throw isorel::ParseError("decompose: --out DIRECTORY is required for multiple inputs");
  std::filesystem::create_directories(out_path);
  struct Item {
    std::string error;
    int rc = kExitOk;
    std::string out_file;
    MultiplicityVector mult{};
  };
  std::vector<Item> items(inputs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1)) {
      Item& item = items[i];
      try {
        const RelationDocument doc = load_document(inputs[i]);
        const DecompositionCertificate cert = decompose(doc.relation);
        item.out_file = (std::filesystem::path(out_path) /
                         (std::filesystem::path(inputs[i]).stem().string() + ".cert.json"))
                            .string();
        emit(certificate_to_json(cert), item.out_file);
        item.mult = cert.mult;
      } catch (const isorel::ParseError& e) {
        item.rc = kExitParse;
        item.error = e.what();
      } catch (const std::domain_error& e) {
        item.rc = kExitNotIsotropic;
        item.error = e.what();
      } catch (const std::exception& e) {
        item.rc = kExitInternal;
        item.error = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Json results = Json::array();
  int rc = kExitOk;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Json r = Json::object();
    r["input"] = inputs[i];
    if (items[i].rc == kExitOk) {
      r["output"] = items[i].out_file;
      Json mult = Json::array();
      for (int t = 0; t < kTypeCount; ++t) mult.push_back(items[i].mult.n[t]);
      r["multiplicities"] = std::move(mult);
    } else {
      r["error"] = items[i].error;
      rc = rc == kExitOk ? items[i].rc : rc;
    }
    results.push_back(std::move(r));
  }
  Json out = Json::object();
  out["results"] = std::move(results);
  std::cout << out.dump(2) << "\n";
  return rc;
}

int run_verify(const std::string& input, const std::string& cert_path,
               const std::string& out_path) {
  const RelationDocument doc = load_document(input);
  const DecompositionCertificate cert = parse_certificate(read_json_input(cert_path));
  const bool ok = verify_certificate(doc.relation, cert);
  Json out = Json::object();
  out["verified"] = ok;
  emit(out, out_path);
  return ok ? kExitOk : kExitVerifyFailed;
}

int run_dualize(const std::string& input, const std::string& out_path) {
  const RelationDocument doc = load_document(input);
  emit(relation_document_to_json(annihilator(doc.relation)), out_path);
  return kExitOk;
}

int run_isomorphic(const std::string& input_a, const std::string& input_b,
                   const std::string& out_path) {
  const RelationDocument a = load_document(input_a);
  const RelationDocument b = load_document(input_b);
  const bool iso = is_isomorphic(a.relation, b.relation);
  Json out = Json::object();
  out["isomorphic"] = iso;
  emit(out, out_path);
  return kExitOk;
}

int run_canonical(const std::string& spec, const std::string& kind,
                  const std::string& out_path) {
  const MultiplicityVector n = parse_mult_spec(spec);
  emit(relation_document_to_json(canonical_sum(n, parse_kind(kind))), out_path);
  return kExitOk;
}

int run_random(const std::string& spec, const std::string& kind, std::uint64_t seed,
               const std::string& out_path) {
  const MultiplicityVector n = parse_mult_spec(spec);
  const RandomInstance inst = random_instance(n, parse_kind(kind), seed);
  emit(relation_document_to_json(inst.relation, seed), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification and decomposition of isotropic and coisotropic linear relations"};
  app.require_subcommand(1);
  int rc = kExitOk;

  std::string in_a, in_b, out_path, spec, kind = "presymplectic";
  std::vector<std::string> inputs;
  bool require = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;

  auto* validate = app.add_subcommand("validate", "report well-formedness and (co)isotropy");
  validate->add_option("input", in_a, "relation document (\"-\" for stdin)")->required();
  validate->add_flag("--require", require, "exit 2 when the relation is not (co)isotropic");
  validate->add_option("--out", out_path, "write the report to a file");
  validate->callback([&] { rc = run_validate(in_a, require, out_path); });

  auto* invariants = app.add_subcommand("invariants", "the 13 dimension invariants");
  invariants->add_option("input", in_a, "relation document (\"-\" for stdin)")->required();
  invariants->add_option("--out", out_path, "write the report to a file");
  invariants->callback([&] { rc = run_invariants(in_a, out_path); });

  auto* mults = app.add_subcommand("multiplicities", "indecomposable type counts");
  mults->add_option("input", in_a, "relation document (\"-\" for stdin)")->required();
  mults->add_option("--out", out_path, "write the report to a file");
  mults->callback([&] { rc = run_multiplicities(in_a, out_path); });

  auto* dec = app.add_subcommand("decompose", "produce a decomposition certificate");
  dec->add_option("inputs", inputs, "relation documents")->required();
  dec->add_option("--out", out_path, "certificate file (single input) or directory");
  dec->add_option("--jobs", jobs, "decompose inputs concurrently")->default_val(1u);
  dec->callback([&] { rc = run_decompose(inputs, out_path, jobs); });

  auto* verify = app.add_subcommand("verify", "check a certificate against a relation");
  verify->add_option("input", in_a, "relation document")->required();
  verify->add_option("certificate", in_b, "certificate file")->required();
  verify->add_option("--out", out_path, "write the report to a file");
  verify->callback([&] { rc = run_verify(in_a, in_b, out_path); });

  auto* dualize = app.add_subcommand("dualize", "annihilator of the relation");
  dualize->add_option("input", in_a, "relation document (\"-\" for stdin)")->required();
  dualize->add_option("--out", out_path, "write the document to a file");
  dualize->callback([&] { rc = run_dualize(in_a, out_path); });

  auto* isomorphic = app.add_subcommand("isomorphic", "compare multiplicity vectors");
  isomorphic->add_option("input_a", in_a, "first relation document")->required();
  isomorphic->add_option("input_b", in_b, "second relation document")->required();
  isomorphic->add_option("--out", out_path, "write the report to a file");
  isomorphic->callback([&] { rc = run_isomorphic(in_a, in_b, out_path); });

  auto* canonical = app.add_subcommand("canonical", "canonical direct sum for given counts");
  canonical->add_option("multiplicities", spec,
                        "13 comma-separated counts, or LABEL:COUNT pairs (e.g. I2:1,I9:2)")
      ->required();
  canonical->add_option("--kind", kind, "presymplectic (default) or poisson");
  canonical->add_option("--out", out_path, "write the document to a file");
  canonical->callback([&] { rc = run_canonical(spec, kind, out_path); });

  auto* random = app.add_subcommand("random", "seeded random conjugate of a canonical sum");
  random->add_option("multiplicities", spec,
                     "13 comma-separated counts, or LABEL:COUNT pairs (e.g. I2:1,I9:2)")
      ->required();
  random->add_option("--seed", seed, "random seed (embedded in the output)")->required();
  random->add_option("--kind", kind, "presymplectic (default) or poisson");
  random->add_option("--out", out_path, "write the document to a file");
  random->callback([&] { rc = run_random(spec, kind, seed, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const isorel::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotIsotropic;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotIsotropic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return rc;
}

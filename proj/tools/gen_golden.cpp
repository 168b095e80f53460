// Regenerates the golden data files from the library:
//   data/m_matrix.json — classification matrix, inverse, column assignment
//   data/catalog.json  — canonical models of the 13 types, both flavors
// Usage: gen_golden [output-dir]
#include <filesystem>
#include <fstream>
#include <iostream>

#include "isorel/catalog.hpp"
#include "isorel/invariants.hpp"
#include "isorel/json_io.hpp"

using namespace isorel;

namespace {

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << j.dump(2) << "\n";
  std::cout << "wrote " << path << "\n";
}

Json int_matrix(const std::array<std::array<long, 13>, 13>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (long v : r) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);
  const ClassificationMatrix& cm = classification_matrix();

  Json m = Json::object();
  m["matrix"] = int_matrix(cm.m);
  m["inverse"] = int_matrix(cm.m_inv);
  Json columns = Json::object();
  for (int t = 0; t < kTypeCount; ++t)
    columns[type_descriptor(tag_from_index(t)).label] = cm.column_of[t] + 1;  // 1-based
  m["column_of"] = std::move(columns);
  write_file(dir / "m_matrix.json", m);

  Json types = Json::array();
  for (int t = 0; t < kTypeCount; ++t) {
    const Tag tag = tag_from_index(t);
    const TypeDescriptor& d = type_descriptor(tag);
    Json entry = Json::object();
    entry["label"] = d.label;
    entry["name"] = d.name;
    entry["column"] = cm.column_of[t] + 1;
    const InvariantVector k = compute_invariants(canonical_indecomposable(tag, Flavor::presymplectic));
    Json kj = Json::array();
    for (int i = 0; i < 13; ++i) kj.push_back(k.k[i]);
    entry["invariants"] = std::move(kj);
    entry["presymplectic"] =
        relation_document_to_json(canonical_indecomposable(tag, Flavor::presymplectic));
    entry["poisson"] = relation_document_to_json(canonical_indecomposable(tag, Flavor::poisson));
    types.push_back(std::move(entry));
  }
  Json cat = Json::object();
  cat["types"] = std::move(types);
  write_file(dir / "catalog.json", cat);
  return 0;
}

#include "isorel/json_io.hpp"

namespace isorel {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

std::size_t size_member(const Json& j, const char* key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(path + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Flavor flavor_from_json(const Json& j, const std::string& path) {
  const Json& v = member(j, "kind", path);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "presymplectic") return Flavor::presymplectic;
    if (s == "poisson") return Flavor::poisson;
  }
  fail(path + ".kind", "expected \"presymplectic\" or \"poisson\"");
}

const char* flavor_label(Flavor f) {
  return f == Flavor::presymplectic ? "presymplectic" : "poisson";
}

Vec vec_from_json(const Json& j, std::size_t len, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != len)
    fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  Vec v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    v.push_back(scalar_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Scalar& x : v) out.push_back(scalar_to_json(x));
  return out;
}

// Dense square form matrix as a plain nested array (shape fixed by dim).
Matrix form_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != dim)
    fail(path, "expected " + std::to_string(dim) + " rows, got " + std::to_string(j.size()));
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    m.set_row(i, vec_from_json(j[i], dim, path + "[" + std::to_string(i) + "]"));
  return m;
}

Json form_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

BilinearSpace space_from_json(const Json& j, Flavor flavor, const std::string& path) {
  const std::size_t dim = size_member(j, "dim", path);
  const Json& form = member(j, "form", path);
  try {
    return BilinearSpace(dim, form_from_json(form, dim, path + ".form"), flavor);
  } catch (const std::invalid_argument& e) {
    fail(path + ".form", e.what());
  }
}

Json space_to_json(const BilinearSpace& s) {
  Json j = Json::object();
  j["dim"] = s.dim;
  j["form"] = form_to_json(s.form);
  return j;
}

}  // namespace

Json scalar_to_json(const Scalar& x) { return Json(rational_to_string(x)); }

Scalar scalar_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return parse_rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational (integer or \"p/q\" string)");
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::object();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  j["rows"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
  const std::size_t cols = size_member(j, "cols", path);
  const Json& rows = member(j, "rows", path);
  if (!rows.is_array()) fail(path + ".rows", "expected an array");
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.set_row(i, vec_from_json(rows[i], cols, path + ".rows[" + std::to_string(i) + "]"));
  return m;
}

Json relation_document_to_json(const LinearRelation& f, std::optional<std::uint64_t> seed) {
  Json j = Json::object();
  j["kind"] = flavor_label(f.target.flavor);
  j["target"] = space_to_json(f.target);
  j["source"] = space_to_json(f.source);
  Json basis = Json::array();
  for (std::size_t i = 0; i < f.graph.dim(); ++i)
    basis.push_back(vec_to_json(f.graph.basis().row(i)));
  j["relation"] = Json::object();
  j["relation"]["basis"] = std::move(basis);
  if (seed) j["seed"] = *seed;
  return j;
}

RelationDocument parse_relation_document(const Json& j) {
  const std::string path = "document";
  const Flavor flavor = flavor_from_json(j, path);
  const BilinearSpace target = space_from_json(member(j, "target", path), flavor, path + ".target");
  const BilinearSpace source = space_from_json(member(j, "source", path), flavor, path + ".source");
  const Json& rel = member(j, "relation", path);
  const Json& basis = member(rel, "basis", path + ".relation");
  if (!basis.is_array()) fail(path + ".relation.basis", "expected an array");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < basis.size(); ++i)
    rows.push_back(vec_from_json(basis[i], target.dim + source.dim,
                                 path + ".relation.basis[" + std::to_string(i) + "]"));
  RelationDocument doc{
      LinearRelation(target, source, Subspace::from_vectors(target.dim + source.dim, rows)),
      std::nullopt};
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
      fail(path + ".seed", "expected a non-negative integer");
    doc.seed = it->get<std::uint64_t>();
  }
  return doc;
}

namespace {

constexpr const char* kTraceMatrixKeys[] = {
    "y_0",     "x_0",     "y_0_dual", "x_0_dual", "y_b",        "x_b",
    "f0_int_rx", "ker_int_ry", "x_r",  "y_r",      "x_i",        "y_i",
    "x_r_extra", "y_r_extra", "x_ig",  "g_yi",     "y_l",        "y_s",
    "x_l",     "x_s",     "x_ig_dual", "y_l_dual", "g_yi_dual",  "x_l_dual",
    "e_y",     "e_x",     "y_s_extra", "x_s_extra"};

std::vector<Matrix*> trace_matrix_fields(StageTrace& tr) {
  return {&tr.y_0,      &tr.x_0,      &tr.y_0_dual,  &tr.x_0_dual, &tr.y_b,       &tr.x_b,
          &tr.f0_int_rx, &tr.ker_int_ry, &tr.x_r,    &tr.y_r,      &tr.x_i,       &tr.y_i,
          &tr.x_r_extra, &tr.y_r_extra, &tr.x_ig,    &tr.g_yi,     &tr.y_l,       &tr.y_s,
          &tr.x_l,      &tr.x_s,      &tr.x_ig_dual, &tr.y_l_dual, &tr.g_yi_dual, &tr.x_l_dual,
          &tr.e_y,      &tr.e_x,      &tr.y_s_extra, &tr.x_s_extra};
}

std::vector<const Matrix*> trace_matrix_fields(const StageTrace& tr) {
  const auto fields = trace_matrix_fields(const_cast<StageTrace&>(tr));
  return std::vector<const Matrix*>(fields.begin(), fields.end());
}

}  // namespace

Json certificate_to_json(const DecompositionCertificate& cert) {
  Json j = Json::object();
  j["kind"] = flavor_label(cert.flavor);
  j["p"] = matrix_to_json(cert.p);
  j["q"] = matrix_to_json(cert.q);
  Json mult = Json::array();
  for (int t = 0; t < kTypeCount; ++t) mult.push_back(cert.mult.n[t]);
  j["multiplicities"] = std::move(mult);
  Json trace = Json::object();
  const auto fields = trace_matrix_fields(cert.trace);
  for (std::size_t i = 0; i < fields.size(); ++i)
    trace[kTraceMatrixKeys[i]] = matrix_to_json(*fields[i]);
  trace["f_c"] = relation_document_to_json(cert.trace.f_c);
  trace["f_b"] = relation_document_to_json(cert.trace.f_b);
  j["trace"] = std::move(trace);
  return j;
}

DecompositionCertificate parse_certificate(const Json& j) {
  const std::string path = "certificate";
  DecompositionCertificate cert;
  cert.flavor = flavor_from_json(j, path);
  cert.p = matrix_from_json(member(j, "p", path), path + ".p");
  cert.q = matrix_from_json(member(j, "q", path), path + ".q");
  const Json& mult = member(j, "multiplicities", path);
  if (!mult.is_array() || mult.size() != static_cast<std::size_t>(kTypeCount))
    fail(path + ".multiplicities", "expected an array of 13 integers");
  for (int t = 0; t < kTypeCount; ++t) {
    const Json& v = mult[static_cast<std::size_t>(t)];
    if (!v.is_number_integer() && !v.is_number_unsigned())
      fail(path + ".multiplicities[" + std::to_string(t) + "]", "expected an integer");
    cert.mult.n[t] = v.get<long>();
  }
  const Json& trace = member(j, "trace", path);
  const auto fields = trace_matrix_fields(cert.trace);
  for (std::size_t i = 0; i < fields.size(); ++i)
    *fields[i] = matrix_from_json(member(trace, kTraceMatrixKeys[i], path + ".trace"),
                                  path + ".trace." + kTraceMatrixKeys[i]);
  cert.trace.f_c = parse_relation_document(member(trace, "f_c", path + ".trace")).relation;
  cert.trace.f_b = parse_relation_document(member(trace, "f_b", path + ".trace")).relation;
  return cert;
}

}  // namespace isorel

#include <doctest.h>

#include <fstream>

#include "helpers.hpp"
#include "isorel/catalog.hpp"
#include "isorel/duality.hpp"
#include "isorel/invariants.hpp"
#include "isorel/json_io.hpp"

using namespace isorel;

namespace {

Json load_golden(const std::string& name) {
  const std::string path = std::string(ISOREL_DATA_DIR) + "/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("tag bookkeeping") {
  for (int t = 0; t < kTypeCount; ++t) CHECK(tag_index(tag_from_index(t)) == t);
  CHECK(tag_from_label("I1") == Tag::I1);
  CHECK(tag_from_label("I13") == Tag::I13);
  CHECK_FALSE(tag_from_label("I14").has_value());
  CHECK_FALSE(tag_from_label("x").has_value());
}

TEST_CASE("canonical models match the golden catalog entry for entry") {
  const Json golden = load_golden("catalog.json");
  REQUIRE(golden["types"].size() == 13);
  const ClassificationMatrix& cm = classification_matrix();
  for (int t = 0; t < kTypeCount; ++t) {
    const Json& entry = golden["types"][t];
    const Tag tag = tag_from_index(t);
    const TypeDescriptor& d = type_descriptor(tag);
    CHECK(entry["label"].get<std::string>() == d.label);
    CHECK(entry["name"].get<std::string>() == d.name);
    CHECK(entry["column"].get<int>() == cm.column_of[t] + 1);

    const InvariantVector k =
        compute_invariants(canonical_indecomposable(tag, Flavor::presymplectic));
    for (int i = 0; i < 13; ++i) CHECK(entry["invariants"][i].get<long>() == k.k[i]);

    CHECK(parse_relation_document(entry["presymplectic"]).relation ==
          canonical_indecomposable(tag, Flavor::presymplectic));
    CHECK(parse_relation_document(entry["poisson"]).relation ==
          canonical_indecomposable(tag, Flavor::poisson));
  }
}

TEST_CASE("descriptors agree with the models") {
  const auto kind_dim = [](SpaceKind k) -> std::size_t {
    switch (k) {
      case SpaceKind::trivial: return 0;
      case SpaceKind::zero_form_line: return 1;
      case SpaceKind::symplectic_plane: return 2;
    }
    return 0;
  };
  for (int t = 0; t < kTypeCount; ++t) {
    const Tag tag = tag_from_index(t);
    const TypeDescriptor& d = type_descriptor(tag);
    const LinearRelation f = canonical_indecomposable(tag, Flavor::presymplectic);
    CHECK(f.target.dim == kind_dim(d.target_kind));
    CHECK(f.source.dim == kind_dim(d.source_kind));
    CHECK(f.graph.dim() == d.graph_dim);
    CHECK(is_isotropic(f));

    const LinearRelation g = canonical_indecomposable(tag, Flavor::poisson);
    // The coisotropic models live on the transposed space pair.
    CHECK(g.target.dim == kind_dim(d.source_kind));
    CHECK(g.source.dim == kind_dim(d.target_kind));
    CHECK(is_coisotropic(g));
    CHECK(g.graph.dim() == g.target.dim + g.source.dim - d.graph_dim);
  }
}

TEST_CASE("canonical_sum folds models in tag order") {
  MultiplicityVector n{};
  n.n[tag_index(Tag::I1)] = 1;
  n.n[tag_index(Tag::I7)] = 2;
  const LinearRelation f = canonical_sum(n, Flavor::presymplectic);
  CHECK(f.target.dim == 4);
  CHECK(f.source.dim == 4);
  CHECK(f.graph.dim() == 4);

  LinearRelation folded;
  folded = direct_sum(folded, canonical_indecomposable(Tag::I1, Flavor::presymplectic));
  folded = direct_sum(folded, canonical_indecomposable(Tag::I7, Flavor::presymplectic));
  folded = direct_sum(folded, canonical_indecomposable(Tag::I7, Flavor::presymplectic));
  CHECK(f == folded);

  const MultiplicityVector zero{};
  const LinearRelation e = canonical_sum(zero, Flavor::presymplectic);
  CHECK(e.target.dim == 0);
  CHECK(e.graph.dim() == 0);
}

TEST_CASE("random_instance is seed-deterministic and invariant-preserving") {
  MultiplicityVector n{};
  n.n[tag_index(Tag::I2)] = 1;
  n.n[tag_index(Tag::I6)] = 1;
  n.n[tag_index(Tag::I9)] = 2;

  const RandomInstance a = random_instance(n, Flavor::presymplectic, 12345);
  const RandomInstance b = random_instance(n, Flavor::presymplectic, 12345);
  const RandomInstance c = random_instance(n, Flavor::presymplectic, 54321);
  CHECK(a.relation == b.relation);
  CHECK(a.p == b.p);
  CHECK_FALSE(a.relation == c.relation);

  REQUIRE(a.p.inverse().has_value());
  REQUIRE(a.q.inverse().has_value());
  CHECK(a.relation ==
        apply_iso_pair(canonical_sum(n, Flavor::presymplectic), a.p, a.q));
  CHECK(multiplicities(compute_invariants(a.relation)).n == n.n);

  const RandomInstance pois = random_instance(n, Flavor::poisson, 777);
  CHECK(is_coisotropic(pois.relation));
}

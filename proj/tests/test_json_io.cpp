#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "isorel/catalog.hpp"
#include "isorel/decompose.hpp"
#include "isorel/json_io.hpp"

using namespace isorel;

namespace {

void check_parse_error(const Json& doc, const std::string& path_fragment) {
  try {
    (void)parse_relation_document(doc);
    FAIL_CHECK("expected a parse error mentioning ", path_fragment);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(path_fragment) != std::string::npos,
                  "message was: ", e.what());
  }
}

}  // namespace

TEST_CASE("scalars serialize to canonical strings and parse from both forms") {
  CHECK(scalar_to_json(Scalar(-3) / 6) == Json("-1/2"));
  CHECK(scalar_to_json(Scalar(4)) == Json("4"));
  CHECK(scalar_from_json(Json(7), "x") == Scalar(7));
  CHECK(scalar_from_json(Json(-2), "x") == Scalar(-2));
  CHECK(scalar_from_json(Json("5/10"), "x") == Scalar(1) / 2);
  CHECK_THROWS_AS(scalar_from_json(Json(1.5), "x"), ParseError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0"), "x"), ParseError);
}

TEST_CASE("matrix round trip preserves entries and shape") {
  const Matrix m = isotest::mat(3, {{1, 0, -2}, {0, 5, 0}});
  const Json j = matrix_to_json(m);
  CHECK(j["cols"] == 3);
  CHECK(matrix_from_json(j, "m") == m);
  CHECK(matrix_from_json(matrix_to_json(Matrix(0, 0)), "m") == Matrix(0, 0));
}

TEST_CASE("relation documents round trip through their canonical form") {
  for (int t = 0; t < kTypeCount; ++t)
    for (const Flavor flavor : {Flavor::presymplectic, Flavor::poisson}) {
      const LinearRelation f = canonical_indecomposable(tag_from_index(t), flavor);
      const Json j = relation_document_to_json(f);
      const RelationDocument back = parse_relation_document(j);
      CHECK(back.relation == f);
      CHECK_FALSE(back.seed.has_value());
      // Canonical serialization is byte-stable.
      CHECK(relation_document_to_json(back.relation).dump() == j.dump());
    }

  const LinearRelation f = random_instance([] {
    MultiplicityVector n{};
    n.n[tag_index(Tag::I1)] = 1;
    n.n[tag_index(Tag::I12)] = 1;
    return n;
  }(), Flavor::presymplectic, 4711).relation;
  const Json with_seed = relation_document_to_json(f, 4711);
  const RelationDocument back = parse_relation_document(with_seed);
  CHECK(back.relation == f);
  CHECK(back.seed == 4711);
}

TEST_CASE("a non-canonical basis is canonicalized on parse") {
  Json doc = relation_document_to_json(
      canonical_indecomposable(Tag::I1, Flavor::presymplectic));
  // Replace the identity-graph basis with a scaled, shuffled spanning set.
  doc["relation"]["basis"] = Json::array({
      Json::array({"0", "2", "0", "2"}),
      Json::array({"3", "3", "3", "3"}),
  });
  const RelationDocument back = parse_relation_document(doc);
  CHECK(back.relation == canonical_indecomposable(Tag::I1, Flavor::presymplectic));
}

TEST_CASE("malformed documents fail with a field path") {
  const Json good = relation_document_to_json(
      canonical_indecomposable(Tag::I1, Flavor::presymplectic));

  Json no_kind = good;
  no_kind.erase("kind");
  check_parse_error(no_kind, "kind");

  Json bad_kind = good;
  bad_kind["kind"] = "linear";
  check_parse_error(bad_kind, "kind");

  Json bad_form = good;
  bad_form["target"]["form"][0][1] = "2";  // breaks skew-symmetry
  check_parse_error(bad_form, "target.form");

  Json short_row = good;
  short_row["relation"]["basis"][0] = Json::array({"1", "0", "1"});
  check_parse_error(short_row, "basis");

  Json bad_entry = good;
  bad_entry["relation"]["basis"][0][0] = "1/0";
  check_parse_error(bad_entry, "basis");

  Json bad_dim = good;
  bad_dim["source"]["dim"] = -2;
  check_parse_error(bad_dim, "source.dim");

  Json bad_seed = good;
  bad_seed["seed"] = "yes";
  check_parse_error(bad_seed, "seed");
}

TEST_CASE("certificates round trip with their traces") {
  MultiplicityVector n{};
  n.n[tag_index(Tag::I1)] = 1;
  n.n[tag_index(Tag::I6)] = 1;
  n.n[tag_index(Tag::I9)] = 1;
  const LinearRelation f = random_instance(n, Flavor::presymplectic, 2024).relation;
  const DecompositionCertificate cert = decompose(f);
  const Json j = certificate_to_json(cert);
  const DecompositionCertificate back = parse_certificate(j);
  CHECK(back.p == cert.p);
  CHECK(back.q == cert.q);
  CHECK(back.mult.n == cert.mult.n);
  CHECK(back.flavor == cert.flavor);
  CHECK(verify_certificate(f, back));
  CHECK(verify_trace(f, back));
  CHECK(certificate_to_json(back).dump() == j.dump());

  Json bad = j;
  bad["multiplicities"][2] = "many";
  CHECK_THROWS_AS(parse_certificate(bad), ParseError);
}

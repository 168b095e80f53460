#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "isorel/decompose.hpp"
#include "isorel/relation.hpp"

namespace isorel {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

// Malformed document; the message names the offending field path.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RelationDocument {
  LinearRelation relation;
  std::optional<std::uint64_t> seed;
};

// Scalars serialize as canonical strings ("3", "-1/2"); parsing also accepts
// plain JSON integers.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix& m);  // {"cols": n, "rows": [[...], ...]}
Matrix matrix_from_json(const Json& j, const std::string& path);

// {"kind", "target": {"dim","form"}, "source": {...}, "relation": {"basis"},
//  "seed"?}; forms are dense row-major arrays, the basis is canonicalized to
// reduced row-echelon form on parse.
Json relation_document_to_json(const LinearRelation& f,
                               std::optional<std::uint64_t> seed = std::nullopt);
RelationDocument parse_relation_document(const Json& j);

// {"kind", "p", "q", "multiplicities": [13 ints], "trace": {...}} with every
// stage basis and both restricted relations embedded for audit.
Json certificate_to_json(const DecompositionCertificate& cert);
DecompositionCertificate parse_certificate(const Json& j);

}  // namespace isorel

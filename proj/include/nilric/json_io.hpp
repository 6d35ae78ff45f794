#pragma once

#include <json.hpp>

#include "nilric/catalog.hpp"

namespace nilric {

using Json = nlohmann::ordered_json;

// Algebra file format:
//   {"dim": 6, "brackets": [{"i":1,"j":2,"rhs":{"3":"1"}}, ...],
//    "labels": ["e1", ...]}       (labels optional)
// Coefficient strings are "p" or "p/q". Entries must have i < j and no pair
// may repeat; violations are parse errors.
LieAlgebra algebra_from_json(const Json& j);
Json algebra_to_json(const LieAlgebra& a);

// Metric file format: {"diag": ["1","2","1/3"]} or {"gram": [[...], ...]},
// optionally with {"basis_change": [[...], ...]} whose columns express the
// basis the diagonal/Gram entries refer to.
Metric metric_from_json(const Json& j, std::size_t dim);
Json metric_to_json(const Metric& m);

Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);

Json signature_to_json(const SignatureTriple& s);
Json certificate_to_json(const RealizationCertificate& c);

CatalogEntry catalog_entry_from_json(const Json& j);

}  // namespace nilric

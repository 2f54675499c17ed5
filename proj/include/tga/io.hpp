#pragma once
#include <optional>
#include <string>

#include "json.hpp"
#include "tga/cocycle.hpp"
#include "tga/group.hpp"
#include "tga/identities.hpp"
#include "tga/reduction.hpp"

namespace tga {

using Json = nlohmann::ordered_json;

// Strict JSON parsing; input_error with the parser diagnostic on failure.
Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& what);

// Group specification (one of the construction keys, plus optional aliases):
//   {"cyclic": n, "generator": "a"}          generator defaults to "a"
//   {"direct": [spec, spec, ...]}            left fold of direct products
//   {"semidirect": {"normal": spec, "acting": spec,
//                   "action": {"h": {"a": "a^3", ...}, ...}}}
//   {"table": [[...]], "names": [...]}       names optional
//   ... "aliases": {"y": "z^2", ...}         extra parse names
GroupPtr group_from_spec(const Json& spec);

// Cocycle specification, resolved against a group (exactly one key):
//   {"trivial": true}
//   {"standard": true}                        the distinguished nondegenerate
//                                             cocycle of a recognized group
//   {"values": [[g, h, "z9^5"], ...]}         g, h element words or indices;
//                                             omitted entries default to 1
//   {"one_cocycle": {"h-word": "a-word", ...}}  bijective 1-cocycle on a
//                                             semidirect product
//   {"perturb": {"of": spec, "seed": n}}      seeded perturbation
Cocycle cocycle_from_spec(const Json& spec, const GroupPtr& g);

// A bundle document {"name": ..., "group": spec, "cocycle": spec} with both
// parts optional beyond the group; a bare group spec is accepted too.
struct Bundle {
  std::string name;
  GroupPtr group;
  std::optional<Cocycle> cocycle;
};
Bundle load_bundle(const Json& doc);
Bundle load_bundle_file(const std::string& path);

// Resolve the cocycle of a document against an existing group: accepts a
// bundle with a "cocycle" key or a bare cocycle spec.
Cocycle cocycle_from_document(const Json& doc, const GroupPtr& g);

// Monomials serialize as literals "x(1,a)*x(2,b)" ("1" when empty);
// identities and certificates as structured objects. Parsing recomputes
// every derived field (coefficients, kappa) from the cocycle, so a tampered
// document fails with math_error rather than deserializing inconsistently.
std::string monomial_literal(const GradedMonomial& z, const Group& g);
GradedMonomial monomial_from_literal(const std::string& text, const GroupPtr& g);
Json identity_to_json(const ElementaryIdentity& e, const Group& g);
ElementaryIdentity identity_from_json(const Json& j, const Cocycle& c);
Json certificate_to_json(const ReductionCertificate& cert, const Group& g);
ReductionCertificate certificate_from_json(const Json& j, const Cocycle& c);
Json polynomial_to_json(const GradedPolynomial& p);

}  // namespace tga

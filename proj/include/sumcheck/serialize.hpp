#pragma once

#include <json.hpp>

#include "sumcheck/field.hpp"
#include "sumcheck/mpoly.hpp"
#include "sumcheck/unipoly.hpp"

namespace sumcheck {

/// All documents use insertion-ordered JSON; writers insert keys in sorted
/// order so output is byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

/// Thrown when a document is structurally valid JSON but violates the schema
/// or an invariant.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Term list `[{"coeff": c, "exps": {"<var>": e, ...}}, ...]` in canonical
/// monomial order, variables ascending within each monomial.
Json poly_to_json(const MultiPoly& p);
/// Accepts any integer coefficients (reduced mod p) and any term order; the
/// result is canonical.
MultiPoly poly_from_json(const Json& j, Modulus m);

Json uni_to_json(const UniPoly& q);

/// `{"<var>": value, ...}` with variables ascending.
Json subst_to_json(const Substitution& s);
Substitution subst_from_json(const Json& j, Modulus m);

/// 64-bit FNV-1a of a string, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace sumcheck

#include "sumcheck/serialize.hpp"

#include <cstdio>
#include <limits>

namespace sumcheck {

namespace {

std::int64_t require_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DocumentError(what + " must be an integer");
  return j.get<std::int64_t>();
}

VarId parse_var(const std::string& key) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
    throw DocumentError("variable id '" + key + "' is not a natural number");
  }
  const auto v = std::stoull(key);
  if (v > std::numeric_limits<VarId>::max()) throw DocumentError("variable id " + key + " too large");
  return static_cast<VarId>(v);
}

}  // namespace

Json poly_to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.entries()) exps[std::to_string(v)] = e;
    terms.push_back(Json{{"coeff", c.value()}, {"exps", std::move(exps)}});
  }
  return terms;
}

MultiPoly poly_from_json(const Json& j, Modulus m) {
  if (!j.is_array()) throw DocumentError("polynomial must be an array of terms");
  MultiPoly p(m);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("exps")) {
      throw DocumentError("each term must be an object with \"coeff\" and \"exps\"");
    }
    const auto coeff = require_int(term.at("coeff"), "coeff");
    std::vector<Monomial::Entry> entries;
    const auto& exps = term.at("exps");
    if (!exps.is_object()) throw DocumentError("exps must be an object");
    for (const auto& [key, value] : exps.items()) {
      const auto e = require_int(value, "exponent");
      if (e < 0 || e > std::numeric_limits<std::uint32_t>::max()) {
        throw DocumentError("exponent out of range for variable " + key);
      }
      entries.emplace_back(parse_var(key), static_cast<std::uint32_t>(e));
    }
    p.add_term(Monomial(std::move(entries)), FieldElement(coeff, m));
  }
  return p;
}

Json uni_to_json(const UniPoly& q) {
  Json out = Json::object();
  for (const auto& [e, c] : q.coeffs()) out[std::to_string(e)] = c.value();
  return out;
}

Json subst_to_json(const Substitution& s) {
  Json out = Json::object();
  for (const auto& [v, x] : s.entries()) out[std::to_string(v)] = x.value();
  return out;
}

Substitution subst_from_json(const Json& j, Modulus m) {
  if (!j.is_object()) throw DocumentError("substitution must be an object");
  Substitution s;
  for (const auto& [key, value] : j.items()) {
    s.assign(parse_var(key), FieldElement(require_int(value, "substitution value"), m));
  }
  return s;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace sumcheck

#include "sumcheck/document.hpp"

#include <limits>
#include <set>

namespace sumcheck {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) throw DocumentError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DocumentError(what + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

InstanceDocument instance_document_from_json(const Json& j) {
  if (!j.is_object()) throw DocumentError("instance document must be a JSON object");
  const auto raw_modulus = as_int(require(j, "modulus"), "modulus");
  if (raw_modulus < 2) throw DocumentError("modulus must be a prime >= 2");
  std::optional<Modulus> m;
  try {
    m.emplace(static_cast<std::uint64_t>(raw_modulus));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }

  const auto& h_json = require(j, "H");
  if (!h_json.is_array()) throw DocumentError("H must be an array of integers");
  if (h_json.empty()) throw DocumentError("H must be nonempty");
  std::vector<FieldElement> H;
  std::set<std::uint32_t> seen;
  for (const auto& h : h_json) {
    FieldElement e(as_int(h, "H element"), *m);
    if (!seen.insert(e.value()).second) {
      throw DocumentError("H contains duplicate element " + std::to_string(e.value()));
    }
    H.push_back(e);
  }

  auto p = poly_from_json(require(j, "polynomial"), *m);
  FieldElement v(as_int(require(j, "v"), "v"), *m);

  InstanceDocument doc{SumcheckInstance{std::move(H), std::move(p), v}, std::nullopt};
  if (j.contains("schedule") && !j.at("schedule").is_null()) {
    const auto& s = j.at("schedule");
    if (!s.is_array()) throw DocumentError("schedule must be an array of variable ids");
    std::vector<VarId> vars;
    std::set<VarId> distinct;
    for (const auto& x : s) {
      const auto id = as_int(x, "schedule entry");
      if (id < 0 || id > std::numeric_limits<VarId>::max()) throw DocumentError("schedule entry out of range");
      if (!distinct.insert(static_cast<VarId>(id)).second) {
        throw DocumentError("schedule repeats variable " + std::to_string(id));
      }
      vars.push_back(static_cast<VarId>(id));
    }
    doc.schedule = std::move(vars);
  }
  return doc;
}

InstanceDocument parse_instance_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return instance_document_from_json(j);
}

Json to_json(const InstanceDocument& doc) {
  Json h = Json::array();
  for (const auto& e : doc.instance.H) h.push_back(e.value());
  Json out = Json::object();
  out["H"] = std::move(h);
  out["modulus"] = doc.instance.p.modulus().value();
  out["polynomial"] = poly_to_json(doc.instance.p);
  if (doc.schedule) out["schedule"] = *doc.schedule;
  out["v"] = doc.instance.v.value();
  return out;
}

std::string serialize(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::vector<VarId> default_schedule(const SumcheckInstance& inst) {
  const auto vs = vars(inst.p);
  return {vs.begin(), vs.end()};
}

std::vector<VarId> schedule_or_default(const InstanceDocument& doc) {
  return doc.schedule ? *doc.schedule : default_schedule(doc.instance);
}

std::string instance_digest(const SumcheckInstance& inst, const std::vector<VarId>& schedule) {
  return fnv1a_hex(to_json(InstanceDocument{inst, schedule}).dump());
}

}  // namespace sumcheck

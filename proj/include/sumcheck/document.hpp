#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumcheck/protocol.hpp"
#include "sumcheck/serialize.hpp"

namespace sumcheck {

/// On-disk sumcheck instance:
///
///   {"H": [0, 1], "modulus": 5, "polynomial": [{"coeff": 1, "exps": {"1": 1}}],
///    "schedule": [1], "v": 2}
///
/// `schedule` is optional. Residues are reduced mod p on load.
struct InstanceDocument {
  SumcheckInstance instance;
  std::optional<std::vector<VarId>> schedule;

  friend bool operator==(const InstanceDocument& a, const InstanceDocument& b) {
    return a.instance.H == b.instance.H && a.instance.p == b.instance.p && a.instance.v == b.instance.v &&
           a.schedule == b.schedule;
  }
};

/// Throws DocumentError; JSON syntax errors report the byte offset.
InstanceDocument parse_instance_document(std::string_view text);
InstanceDocument instance_document_from_json(const Json& j);

Json to_json(const InstanceDocument& doc);
/// Canonical text form: sorted keys, canonical term order, two-space indent,
/// trailing newline.
std::string serialize(const InstanceDocument& doc);

/// The schedule variables to use: the document's, else vars(p) ascending.
std::vector<VarId> schedule_or_default(const InstanceDocument& doc);
std::vector<VarId> default_schedule(const SumcheckInstance& inst);

/// FNV-1a digest of the canonical serialization of (instance, schedule).
std::string instance_digest(const SumcheckInstance& inst, const std::vector<VarId>& schedule);

}  // namespace sumcheck

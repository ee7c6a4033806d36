#include "sumcheck/protocol.hpp"

#include <variant>

namespace sumcheck {

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kVariable: return "variable";
    case CheckKind::kDegree: return "degree";
    case CheckKind::kEvaluation: return "evaluation";
    case CheckKind::kBase: return "base";
  }
  return "unknown";
}

Modulus validate(const SumcheckInstance& inst) {
  const Modulus m = inst.p.modulus();
  if (inst.H.empty()) throw PreconditionError("H must be nonempty");
  if (inst.v.modulus() != m) throw ModulusMismatch(m.value(), inst.v.prime());
  std::set<std::uint32_t> seen;
  for (const auto& h : inst.H) {
    if (h.modulus() != m) throw ModulusMismatch(m.value(), h.prime());
    if (!seen.insert(h.value()).second) {
      throw PreconditionError("H contains duplicate element " + std::to_string(h.value()));
    }
  }
  return m;
}

std::pair<MultiPoly, ProverState> honest_prover_message(const SumcheckInstance& inst, VarId x,
                                                        const std::vector<VarId>& xs, FieldElement /*r*/,
                                                        const ProverState& state) {
  ProverState next = state;
  ++next.round;
  next.note.clear();
  return {honest_message(MPolyStructure(inst.p.modulus()), inst, x, xs), std::move(next)};
}

std::pair<MultiPoly, ProverState> HonestProver::next_message(const SumcheckInstance& inst, VarId x,
                                                             const std::vector<VarId>& xs, FieldElement r,
                                                             const ProverState& state) const {
  return honest_prover_message(inst, x, xs, r, state);
}

RoundSchedule zip_schedule(const std::vector<VarId>& vars, const std::vector<FieldElement>& randomness) {
  if (vars.size() != randomness.size()) {
    throw PreconditionError("schedule variables and randomness differ in length");
  }
  RoundSchedule out;
  out.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) out.emplace_back(vars[i], randomness[i]);
  return out;
}

namespace {

void check_schedule_field(Modulus m, FieldElement r0, const RoundSchedule& schedule) {
  if (r0.modulus() != m) throw ModulusMismatch(m.value(), r0.prime());
  for (const auto& [x, r] : schedule) {
    if (r.modulus() != m) throw ModulusMismatch(m.value(), r.prime());
  }
}

}  // namespace

Transcript sumcheck_run(const ProverStrategy& prover, const ProverState& state, const SumcheckInstance& inst,
                        FieldElement r0, const RoundSchedule& schedule, RunMode mode) {
  const Modulus m = validate(inst);
  check_schedule_field(m, r0, schedule);
  auto call = [&prover](const SumcheckInstance& i, VarId x, const std::vector<VarId>& xs, FieldElement r,
                        ProverState s) { return prover.next_message(i, x, xs, r, s); };
  return run_sumcheck(MPolyStructure(m), call, state, inst, r0, schedule, mode);
}

bool sumcheck_as_generic(const ProverStrategy& prover, const ProverState& state, const SumcheckInstance& inst,
                         FieldElement r0, const RoundSchedule& schedule) {
  const Modulus m = validate(inst);
  check_schedule_field(m, r0, schedule);
  const MPolyStructure s(m);
  check_run_preconditions(s, inst, schedule);

  using VerifierState = std::monostate;

  auto ver0 = [&s](const SumcheckInstance& i, VerifierState) {
    return i.v == s.eval(i.p, s.empty_subst());
  };

  auto ver1 = [&s](const SumcheckInstance& i, const MultiPoly& q, FieldElement r_next, VarId x,
                   const std::vector<VarId>& /*rest*/, VerifierState vs) {
    const auto q_vars = s.vars(q);
    const bool variable_ok = q_vars.empty() || q_vars == std::set<VarId>{x};
    const bool degree_ok = s.deg(q) <= s.deg(i.p);
    const auto at = s.singleton(x, r_next);
    SumcheckInstance next{i.H, s.inst(i.p, at), i.v};
    if (!variable_ok) {
      // q cannot be evaluated at a point; the verdict is already false.
      return std::tuple{false, std::move(next), vs};
    }
    const bool evaluation_ok = i.v == sum_over_h(s, q, x, i.H);
    next.v = s.eval(q, at);
    return std::tuple{variable_ok && degree_ok && evaluation_ok, std::move(next), vs};
  };

  auto prv = [&prover](const SumcheckInstance& i, VarId x, const std::vector<VarId>& rest, FieldElement r,
                       ProverState ps) { return prover.next_message(i, x, rest, r, ps); };

  return generic_prove<SumcheckInstance, VarId, FieldElement>(
      ver0, ver1, VerifierState{}, prv, state, inst, r0,
      std::span<const std::pair<VarId, FieldElement>>(schedule));
}

Json to_json(const Transcript& t) {
  Json rounds = Json::array();
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const auto& rd = t.rounds[i];
    Json j = Json::object();
    j["checks"] = Json{{"degree", rd.degree_ok}, {"evaluation", rd.evaluation_ok}, {"variable", rd.variable_ok}};
    j["message"] = poly_to_json(rd.message);
    if (!rd.note.empty()) j["note"] = rd.note;
    j["randomness"] = rd.randomness.value();
    if (rd.reduced_p) {
      j["reduced"] = Json{{"polynomial", poly_to_json(*rd.reduced_p)}, {"v", rd.reduced_v->value()}};
    } else {
      j["reduced"] = nullptr;
    }
    j["round"] = i + 1;
    j["variable"] = rd.variable;
    rounds.push_back(std::move(j));
  }
  Json out = Json::object();
  out["accept"] = t.accept;
  out["base"] = Json{{"evaluated", t.base_evaluated}, {"ok", t.base_ok}};
  if (auto f = t.first_failure()) {
    out["first_failure"] = Json{{"check", std::string(check_name(f->second))}, {"round", f->first + 1}};
  } else {
    out["first_failure"] = nullptr;
  }
  out["rounds"] = std::move(rounds);
  return out;
}

}  // namespace sumcheck

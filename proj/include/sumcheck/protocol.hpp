#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "sumcheck/field.hpp"
#include "sumcheck/mpoly.hpp"
#include "sumcheck/serialize.hpp"
#include "sumcheck/structure.hpp"

namespace sumcheck {

/// Raised before any round runs when an instance or schedule is unusable.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Generic public-coin proofs

/// Runs a public-coin interaction.
///
/// With no rounds left the verdict is `ver0(instance, vs)`. Otherwise the
/// prover answers `prover(instance, x, remaining_public, r, ps)`; the verifier
/// maps that to `(ok, next_instance, next_vs)` via
/// `ver1(instance, resp, r_next, x, remaining_public, vs)` and the result is
/// `ok` conjoined with the run on the rest of `rounds`.
template <class Instance, class Public, class Rand, class VerifierState, class ProverState,
          class Ver0, class Ver1, class Prover>
bool generic_prove(const Ver0& ver0, const Ver1& ver1, VerifierState vs, const Prover& prover,
                   ProverState ps, Instance instance, Rand r,
                   std::span<const std::pair<Public, Rand>> rounds) {
  bool ok_so_far = true;
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const auto& [x, r_next] = rounds[i];
    std::vector<Public> rest;
    rest.reserve(rounds.size() - i - 1);
    for (std::size_t j = i + 1; j < rounds.size(); ++j) rest.push_back(rounds[j].first);

    auto [resp, ps_next] = prover(instance, x, rest, r, std::move(ps));
    auto [ok, next_instance, vs_next] = ver1(instance, resp, r_next, x, rest, std::move(vs));
    ok_so_far = ok_so_far && ok;
    instance = std::move(next_instance);
    vs = std::move(vs_next);
    ps = std::move(ps_next);
    r = r_next;
  }
  return ver0(instance, vs) && ok_so_far;
}

// ---------------------------------------------------------------------------
// Sumcheck over an arbitrary polynomial structure

/// (H, p, v): claim that the sum of p over H^vars(p) equals v.
template <PolynomialStructure S>
struct BasicInstance {
  std::vector<typename S::Arg> H;
  typename S::Poly p;
  typename S::Result v;
};

/// Ordered (variable, verifier randomness) pairs, one per round.
template <PolynomialStructure S>
using BasicSchedule = std::vector<std::pair<typename S::Var, typename S::Arg>>;

enum class CheckKind { kVariable, kDegree, kEvaluation, kBase };

std::string_view check_name(CheckKind kind);

template <PolynomialStructure S>
struct BasicRound {
  typename S::Var variable;
  typename S::Poly message;
  typename S::Arg randomness;
  bool variable_ok = false;
  bool degree_ok = false;
  bool evaluation_ok = false;
  /// The reduced instance (inst p [x -> r'], eval q [x -> r']). Empty when
  /// the variable check failed: the message then cannot be evaluated at a
  /// single point, so the run stops at this round (verdict already reject).
  std::optional<typename S::Poly> reduced_p;
  std::optional<typename S::Result> reduced_v;
  std::string note;

  bool ok() const noexcept { return variable_ok && degree_ok && evaluation_ok; }
};

template <PolynomialStructure S>
struct BasicTranscript {
  std::vector<BasicRound<S>> rounds;
  /// Whether the base case ran (false when the run stopped early).
  bool base_evaluated = false;
  bool base_ok = false;
  bool accept = false;

  /// Round index (0-based, == rounds.size() for the base case) and kind of the
  /// first failing check, if any.
  std::optional<std::pair<std::size_t, CheckKind>> first_failure() const {
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      if (!rounds[i].variable_ok) return std::pair{i, CheckKind::kVariable};
      if (!rounds[i].degree_ok) return std::pair{i, CheckKind::kDegree};
      if (!rounds[i].evaluation_ok) return std::pair{i, CheckKind::kEvaluation};
    }
    if (base_evaluated && !base_ok) return std::pair{rounds.size(), CheckKind::kBase};
    return std::nullopt;
  }
};

enum class RunMode {
  /// Every round is executed and recorded even after a failed check.
  kFull,
  /// Stop at the first failed check. Same verdict as kFull.
  kShortCircuit,
};

/// Rejects schedules with repeated variables, schedules that miss a variable
/// of p, and empty H.
template <PolynomialStructure S>
void check_run_preconditions(const S& s, const BasicInstance<S>& inst, const BasicSchedule<S>& schedule) {
  if (inst.H.empty()) throw PreconditionError("H must be nonempty");
  std::set<typename S::Var> seen;
  for (const auto& [x, r] : schedule) {
    if (!seen.insert(x).second) throw PreconditionError("schedule repeats a variable");
  }
  for (const auto& v : s.vars(inst.p)) {
    if (!seen.contains(v)) throw PreconditionError("schedule does not cover every variable of p");
  }
}

/// The honest prover's message: the sum over all substitutions of `xs` into H
/// of inst p sigma, a polynomial in x alone.
template <PolynomialStructure S>
typename S::Poly honest_message(const S& s, const BasicInstance<S>& inst, const typename S::Var& x,
                                const std::vector<typename S::Var>& xs) {
  std::set<typename S::Var> rest(xs.begin(), xs.end());
  if (rest.contains(x)) throw PreconditionError("prover variable appears among the remaining ones");
  for (const auto& v : s.vars(inst.p)) {
    if (v != x && !rest.contains(v)) {
      throw PreconditionError("polynomial has a variable outside the current and remaining ones");
    }
  }
  return sum_insts(s, inst.p, rest, inst.H);
}

/// Sum of eval q [x -> h] over h in H.
template <PolynomialStructure S>
typename S::Result sum_over_h(const S& s, const typename S::Poly& q, const typename S::Var& x,
                              const std::vector<typename S::Arg>& H) {
  auto acc = s.result_zero();
  for (const auto& h : H) acc = s.result_add(acc, s.eval(q, s.singleton(x, h)));
  return acc;
}

/// Executes the sumcheck protocol with verifier randomness fixed by
/// `schedule`. `prover(inst, x, xs, r, state)` returns `(message, next_state)`.
/// Preconditions are checked once up front.
template <PolynomialStructure S, class Prover, class State>
BasicTranscript<S> run_sumcheck(const S& s, const Prover& prover, State state, BasicInstance<S> inst,
                                typename S::Arg r, const BasicSchedule<S>& schedule,
                                RunMode mode = RunMode::kFull) {
  check_run_preconditions(s, inst, schedule);
  BasicTranscript<S> t;
  bool all_ok = true;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& [x, r_next] = schedule[i];
    std::vector<typename S::Var> rest;
    for (std::size_t j = i + 1; j < schedule.size(); ++j) rest.push_back(schedule[j].first);

    auto [q, next_state] = prover(inst, x, rest, r, std::move(state));

    BasicRound<S> round{x, q, r_next, false, false, false, std::nullopt, std::nullopt, {}};
    if constexpr (requires { next_state.note; }) round.note = next_state.note;
    const auto q_vars = s.vars(q);
    round.variable_ok = q_vars.empty() || (q_vars.size() == 1 && *q_vars.begin() == x);
    round.degree_ok = s.deg(q) <= s.deg(inst.p);
    if (!round.variable_ok) {
      t.rounds.push_back(std::move(round));
      return t;  // accept stays false
    }
    round.evaluation_ok = inst.v == sum_over_h(s, q, x, inst.H);

    const auto at = s.singleton(x, r_next);
    auto p_next = s.inst(inst.p, at);
    auto v_next = s.eval(q, at);

    // vars_inst / deg_inst along the run.
    for (const auto& v : s.vars(p_next)) {
      if (v == x || !s.vars(inst.p).contains(v)) {
        throw std::logic_error("reduction introduced a variable not in vars(p) \\ {x}");
      }
    }
    if (s.deg(p_next) > s.deg(inst.p)) throw std::logic_error("reduction increased the degree");

    round.reduced_p = p_next;
    round.reduced_v = v_next;
    all_ok = all_ok && round.ok();
    t.rounds.push_back(std::move(round));
    if (!all_ok && mode == RunMode::kShortCircuit) return t;

    inst.p = std::move(p_next);
    inst.v = std::move(v_next);
    r = r_next;
    state = std::move(next_state);
  }
  if (!s.vars(inst.p).empty()) {
    throw std::logic_error("base case reached with a non-constant polynomial");
  }
  t.base_evaluated = true;
  t.base_ok = inst.v == s.eval(inst.p, s.empty_subst());
  t.accept = all_ok && t.base_ok;
  return t;
}

// ---------------------------------------------------------------------------
// Field instance

using SumcheckInstance = BasicInstance<MPolyStructure>;
using RoundSchedule = BasicSchedule<MPolyStructure>;
using Round = BasicRound<MPolyStructure>;
using Transcript = BasicTranscript<MPolyStructure>;

/// Checks the instance invariants: H nonempty with distinct elements, and a
/// single modulus shared by H, p and v. Returns the modulus.
Modulus validate(const SumcheckInstance& inst);

/// Per-run prover state shared by every shipped strategy.
struct ProverState {
  std::uint64_t round = 0;
  /// Claimed value minus the true remaining sum, as last observed.
  std::optional<FieldElement> discrepancy;
  /// Free-form remark recorded in the transcript for the current round.
  std::string note;

  friend bool operator==(const ProverState&, const ProverState&) = default;
};

/// A (possibly dishonest) prover. Implementations must be pure functions of
/// their arguments.
class ProverStrategy {
 public:
  virtual ~ProverStrategy() = default;
  virtual std::string name() const = 0;
  virtual ProverState initial_state() const { return {}; }
  virtual std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                         const std::vector<VarId>& xs, FieldElement r,
                                                         const ProverState& state) const = 0;
};

class HonestProver final : public ProverStrategy {
 public:
  std::string name() const override { return "honest"; }
  std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                 const std::vector<VarId>& xs, FieldElement r,
                                                 const ProverState& state) const override;
};

/// Free-function form of the honest prover; ignores v, r and the state.
std::pair<MultiPoly, ProverState> honest_prover_message(const SumcheckInstance& inst, VarId x,
                                                        const std::vector<VarId>& xs, FieldElement r,
                                                        const ProverState& state);

/// Builds a schedule pairing `vars` with `randomness` positionally.
RoundSchedule zip_schedule(const std::vector<VarId>& vars, const std::vector<FieldElement>& randomness);

Transcript sumcheck_run(const ProverStrategy& prover, const ProverState& state, const SumcheckInstance& inst,
                        FieldElement r0, const RoundSchedule& schedule, RunMode mode = RunMode::kFull);

/// The same protocol expressed through generic_prove; must agree with
/// sumcheck_run on every input.
bool sumcheck_as_generic(const ProverStrategy& prover, const ProverState& state, const SumcheckInstance& inst,
                         FieldElement r0, const RoundSchedule& schedule);

Json to_json(const Transcript& t);

}  // namespace sumcheck

#include <gtest/gtest.h>

#include "sumcheck/adversary.hpp"
#include "sumcheck/analysis.hpp"
#include "sumcheck/document.hpp"
#include "sumcheck/rng.hpp"
#include "sumcheck/random_poly.hpp"

using namespace sumcheck;

namespace {

const Modulus k5(5);

FieldElement f(std::int64_t v, Modulus m = k5) { return FieldElement(v, m); }

std::vector<FieldElement> elems(std::initializer_list<std::int64_t> vs, Modulus m = k5) {
  std::vector<FieldElement> out;
  for (auto v : vs) out.push_back(f(v, m));
  return out;
}

// x1 + x2 over F_5 with H = {0, 1}; the true sum is 4.
SumcheckInstance linear_instance(std::int64_t v) {
  return {elems({0, 1}), MultiPoly(k5, {{Monomial::variable(1), 1}, {Monomial::variable(2), 1}}), f(v)};
}

// Sends x^2 + x*y: fails the variable check.
class TwoVariableProver final : public ProverStrategy {
 public:
  std::string name() const override { return "two-variable"; }
  std::pair<MultiPoly, ProverState> next_message(const SumcheckInstance& inst, VarId x,
                                                 const std::vector<VarId>& xs, FieldElement,
                                                 const ProverState& s) const override {
    const VarId y = xs.empty() ? x + 100 : xs.front();
    return {MultiPoly(inst.p.modulus(), {{Monomial::variable(x, 2), 1}, {Monomial{{x, 1}, {y, 1}}, 1}}), s};
  }
};

std::vector<std::shared_ptr<const ProverStrategy>> every_strategy() {
  auto out = default_strategies(3);
  out.push_back(std::make_shared<TwoVariableProver>());
  return out;
}

}  // namespace

TEST(HonestMessage, SumsOutRemainingVariables) {
  const auto inst = linear_instance(4);
  const MPolyStructure s(k5);
  const MultiPoly expected(k5, {{Monomial::variable(1), 2}, {Monomial{}, 1}});
  EXPECT_EQ(honest_message(s, inst, 1, {2}), expected);
}

TEST(HonestMessage, NoRemainingVariablesReturnsP) {
  const SumcheckInstance inst{elems({0, 1}), MultiPoly(k5, {{Monomial::variable(1, 2), 3}}), f(0)};
  EXPECT_EQ(honest_message(MPolyStructure(k5), inst, 1, {}), inst.p);
}

TEST(HonestMessage, PassesVariableAndDegreeChecksOnRandomInputs) {
  SplitMix64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const Modulus m(std::array<std::uint64_t, 3>{3, 5, 7}[rng.below(3)]);
    const SumcheckInstance inst{random_subset(rng, m, 3), random_poly(rng, m, {1, 2, 3}), f(0, m)};
    const auto q = honest_message(MPolyStructure(m), inst, 2, {1, 3});
    EXPECT_TRUE(vars(q).empty() || vars(q) == std::set<VarId>{2});
    EXPECT_LE(total_degree(q), total_degree(inst.p));
  }
}

TEST(SumcheckRun, ConstantBaseCase) {
  const SumcheckInstance inst{elems({0, 1}), MultiPoly::constant(f(3)), f(3)};
  const auto t = sumcheck_run(HonestProver(), {}, inst, f(0), {});
  EXPECT_TRUE(t.accept);
  EXPECT_TRUE(t.base_evaluated);
  EXPECT_TRUE(t.rounds.empty());
  EXPECT_FALSE(sumcheck_run(HonestProver(), {}, SumcheckInstance{inst.H, inst.p, f(2)}, f(0), {}).accept);
}

TEST(SumcheckRun, TrueClaimAcceptedForEverySchedule) {
  for (const auto& order : {std::vector<VarId>{1, 2}, std::vector<VarId>{2, 1}}) {
    for (const auto& rs : enumerate_tuples(2, k5)) {
      const auto t = sumcheck_run(HonestProver(), {}, linear_instance(4), f(0), zip_schedule(order, rs));
      EXPECT_TRUE(t.accept);
      EXPECT_FALSE(t.first_failure().has_value());
    }
  }
}

TEST(SumcheckRun, FalseClaimRejectedInFirstRound) {
  const auto t = sumcheck_run(HonestProver(), {}, linear_instance(3), f(0), zip_schedule({1, 2}, elems({2, 3})));
  EXPECT_FALSE(t.accept);
  ASSERT_EQ(t.rounds.size(), 2u);
  EXPECT_TRUE(t.rounds[0].variable_ok);
  EXPECT_TRUE(t.rounds[0].degree_ok);
  EXPECT_FALSE(t.rounds[0].evaluation_ok);
  const auto failure = t.first_failure();
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->first, 0u);
  EXPECT_EQ(failure->second, CheckKind::kEvaluation);
}

TEST(SumcheckRun, ShortCircuitStopsEarlyWithSameVerdict) {
  const auto schedule = zip_schedule({1, 2}, elems({2, 3}));
  const auto t = sumcheck_run(HonestProver(), {}, linear_instance(3), f(0), schedule, RunMode::kShortCircuit);
  EXPECT_FALSE(t.accept);
  EXPECT_EQ(t.rounds.size(), 1u);
  EXPECT_FALSE(t.base_evaluated);
}

TEST(SumcheckRun, PreconditionsCheckedUpFront) {
  const auto inst = linear_instance(4);
  EXPECT_THROW(sumcheck_run(HonestProver(), {}, inst, f(0), zip_schedule({1, 1}, elems({0, 0}))),
               PreconditionError);
  EXPECT_THROW(sumcheck_run(HonestProver(), {}, inst, f(0), zip_schedule({1}, elems({0}))), PreconditionError);
  SumcheckInstance empty_h = inst;
  empty_h.H.clear();
  EXPECT_THROW(sumcheck_run(HonestProver(), {}, empty_h, f(0), zip_schedule({1, 2}, elems({0, 0}))),
               PreconditionError);
  SumcheckInstance dup_h = inst;
  dup_h.H = elems({1, 1});
  EXPECT_THROW(sumcheck_run(HonestProver(), {}, dup_h, f(0), zip_schedule({1, 2}, elems({0, 0}))),
               PreconditionError);
  EXPECT_THROW(sumcheck_run(HonestProver(), {}, inst, FieldElement(0, Modulus(7)),
                            zip_schedule({1, 2}, elems({0, 0}))),
               ModulusMismatch);
  EXPECT_THROW(zip_schedule({1, 2}, elems({0})), PreconditionError);
}

TEST(SumcheckRun, ProductCollapsesWhenFirstChallengeIsZero) {
  const SumcheckInstance inst{elems({0, 1}), MultiPoly(k5, {{Monomial{{1, 1}, {2, 1}}, 1}}), f(1)};
  const auto t = sumcheck_run(HonestProver(), {}, inst, f(0), zip_schedule({1, 2}, elems({0, 4})));
  EXPECT_TRUE(t.accept);
  ASSERT_EQ(t.rounds.size(), 2u);
  ASSERT_TRUE(t.rounds[0].reduced_p.has_value());
  EXPECT_TRUE(t.rounds[0].reduced_p->is_zero());
  EXPECT_TRUE(t.rounds[1].message.is_zero());
  // A false claim on the same polynomial is still caught.
  EXPECT_FALSE(sumcheck_run(HonestProver(), {}, SumcheckInstance{inst.H, inst.p, f(2)}, f(0),
                            zip_schedule({1, 2}, elems({0, 4})))
                   .accept);
}

TEST(SumcheckRun, VariableCheckFailureRejects) {
  const auto t =
      sumcheck_run(TwoVariableProver(), {}, linear_instance(4), f(0), zip_schedule({1, 2}, elems({1, 1})));
  EXPECT_FALSE(t.accept);
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_FALSE(t.rounds[0].variable_ok);
  EXPECT_FALSE(t.rounds[0].reduced_p.has_value());
  EXPECT_EQ(t.first_failure()->second, CheckKind::kVariable);
}

TEST(SumcheckRun, ReductionInvariantAlongTranscripts) {
  SplitMix64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto inst = generate_instance(rng.below(2) ? InstanceKind::kValid : InstanceKind::kFalse,
                                        {5, 3, 3, 2, rng.next()});
    const auto vars = default_schedule(inst);
    std::vector<FieldElement> rs;
    for (std::size_t k = 0; k < vars.size(); ++k) rs.push_back(random_element(rng, k5));
    const auto t = sumcheck_run(RootPlantingProver(), {}, inst, f(0), zip_schedule(vars, rs));
    auto current = inst.p;
    for (const auto& rd : t.rounds) {
      ASSERT_TRUE(rd.reduced_p.has_value());
      for (auto v : sumcheck::vars(*rd.reduced_p)) {
        EXPECT_NE(v, rd.variable);
        EXPECT_TRUE(sumcheck::vars(current).contains(v));
      }
      EXPECT_LE(total_degree(*rd.reduced_p), total_degree(current));
      current = *rd.reduced_p;
    }
  }
}

TEST(SumcheckRun, FullAndShortCircuitAgree) {
  SplitMix64 rng(99);
  const auto strategies = every_strategy();
  for (int i = 0; i < 500; ++i) {
    const Modulus m(std::array<std::uint64_t, 3>{3, 5, 7}[rng.below(3)]);
    const auto inst = generate_instance(rng.below(2) ? InstanceKind::kValid : InstanceKind::kFalse,
                                        {static_cast<std::uint32_t>(m.value()), 2, 3, 2, rng.next()});
    const auto vars = default_schedule(inst);
    std::vector<FieldElement> rs;
    for (std::size_t k = 0; k < vars.size(); ++k) rs.push_back(random_element(rng, m));
    const auto& prover = *strategies[rng.below(strategies.size())];
    const auto full = sumcheck_run(prover, {}, inst, f(0, m), zip_schedule(vars, rs), RunMode::kFull);
    const auto fast = sumcheck_run(prover, {}, inst, f(0, m), zip_schedule(vars, rs), RunMode::kShortCircuit);
    EXPECT_EQ(full.accept, fast.accept);
    EXPECT_LE(fast.rounds.size(), full.rounds.size());
  }
}

TEST(SumcheckRun, CompletenessExhaustiveOnSmallFields) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const auto inst = generate_instance(InstanceKind::kValid, {p, 2, 3, std::min(2u, p), seed});
      const auto vars = default_schedule(inst);
      const auto prob = exact_acceptance(HonestProver(), inst, vars, FieldElement::zero(Modulus(p)));
      EXPECT_EQ(prob.accepting, prob.total) << "p=" << p << " seed=" << seed;
    }
  }
}

TEST(GenericProve, EmptyRoundsUseVer0) {
  auto ver0 = [](int, int) { return true; };
  auto ver1 = [](int i, int, int, int, const std::vector<int>&, int vs) { return std::tuple{false, i, vs}; };
  auto prv = [](int, int, const std::vector<int>&, int, int ps) { return std::pair{0, ps}; };
  const std::vector<std::pair<int, int>> none;
  EXPECT_TRUE((generic_prove<int, int, int>(ver0, ver1, 0, prv, 0, 0, 0, std::span<const std::pair<int, int>>(none))));
}

TEST(GenericProve, FailedRoundRejectsRegardlessOfRest) {
  auto ver0 = [](int, int) { return true; };
  auto ver1 = [](int i, int, int, int, const std::vector<int>&, int vs) { return std::tuple{false, i, vs}; };
  auto prv = [](int, int, const std::vector<int>&, int, int ps) { return std::pair{0, ps}; };
  const std::vector<std::pair<int, int>> one{{1, 1}};
  EXPECT_FALSE((generic_prove<int, int, int>(ver0, ver1, 0, prv, 0, 0, 0, std::span<const std::pair<int, int>>(one))));
}

TEST(GenericProve, ThreadsStateThroughRounds) {
  // The prover returns the remaining public info length; the verifier sums it.
  auto ver0 = [](int total, int vs) { return total == 3 && vs == 3; };
  auto ver1 = [](int i, int resp, int, int, const std::vector<int>&, int vs) {
    return std::tuple{true, i + resp, vs + 1};
  };
  auto prv = [](int, int, const std::vector<int>& rest, int, int ps) {
    return std::pair{static_cast<int>(rest.size()), ps + 1};
  };
  const std::vector<std::pair<int, int>> rounds{{1, 0}, {2, 0}, {3, 0}};
  EXPECT_TRUE((generic_prove<int, int, int>(ver0, ver1, 0, prv, 0, 0, 0,
                                            std::span<const std::pair<int, int>>(rounds))));
}

TEST(SumcheckAsGeneric, AgreesOnWorkedExamples) {
  const SumcheckInstance constant{elems({0, 1}), MultiPoly::constant(f(3)), f(3)};
  EXPECT_TRUE(sumcheck_as_generic(HonestProver(), {}, constant, f(0), {}));
  const auto schedule = zip_schedule({1, 2}, elems({2, 3}));
  EXPECT_TRUE(sumcheck_as_generic(HonestProver(), {}, linear_instance(4), f(0), schedule));
  EXPECT_FALSE(sumcheck_as_generic(HonestProver(), {}, linear_instance(3), f(0), schedule));
  EXPECT_FALSE(sumcheck_as_generic(TwoVariableProver(), {}, linear_instance(4), f(0), schedule));
}

TEST(SumcheckAsGeneric, AgreesWithDirectRunOnRandomInputs) {
  SplitMix64 rng(1234);
  const auto strategies = every_strategy();
  for (int i = 0; i < 1000; ++i) {
    const Modulus m(std::array<std::uint64_t, 4>{2, 3, 5, 7}[rng.below(4)]);
    const auto h = static_cast<std::uint32_t>(1 + rng.below(std::min<std::uint64_t>(3, m.value())));
    const auto inst = generate_instance(rng.below(2) ? InstanceKind::kValid : InstanceKind::kFalse,
                                        {static_cast<std::uint32_t>(m.value()), 3, 3, h, rng.next()});
    auto vars = default_schedule(inst);
    if (rng.below(3) == 0) vars.push_back(9);
    for (std::size_t k = vars.size(); k > 1; --k) std::swap(vars[k - 1], vars[rng.below(k)]);
    std::vector<FieldElement> rs;
    for (std::size_t k = 0; k < vars.size(); ++k) rs.push_back(random_element(rng, m));
    const auto& prover = *strategies[rng.below(strategies.size())];
    const auto r0 = random_element(rng, m);
    bool direct = false, generic = false;
    bool direct_threw = false, generic_threw = false;
    try {
      direct = sumcheck_run(prover, {}, inst, r0, zip_schedule(vars, rs)).accept;
    } catch (const PreconditionError&) {
      direct_threw = true;
    }
    try {
      generic = sumcheck_as_generic(prover, {}, inst, r0, zip_schedule(vars, rs));
    } catch (const PreconditionError&) {
      generic_threw = true;
    }
    EXPECT_EQ(direct_threw, generic_threw);
    EXPECT_EQ(direct, generic) << "case " << i;
  }
}

TEST(TranscriptJson, RecordsEveryRound) {
  const auto t = sumcheck_run(HonestProver(), {}, linear_instance(3), f(0), zip_schedule({1, 2}, elems({2, 3})));
  const auto j = to_json(t);
  EXPECT_EQ(j.at("accept"), false);
  EXPECT_EQ(j.at("rounds").size(), 2u);
  EXPECT_EQ(j.at("first_failure").at("check"), "evaluation");
  EXPECT_EQ(j.at("first_failure").at("round"), 1);
  EXPECT_EQ(j.at("rounds")[0].at("checks").at("evaluation"), false);
  EXPECT_EQ(j.at("rounds")[0].at("variable"), 1);
  EXPECT_EQ(j.dump(), to_json(t).dump());
}

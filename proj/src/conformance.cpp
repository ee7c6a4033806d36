#include "sumcheck/conformance.hpp"

#include "sumcheck/random_poly.hpp"

namespace sumcheck {

namespace {

constexpr std::array<std::string_view, 11> kLawNames = {
    "vars_finite", "vars_zero", "vars_add",  "vars_inst", "deg_zero", "deg_add",
    "deg_inst",    "eval_zero", "eval_add",  "eval_inst", "roots"};
constexpr std::array<std::string_view, 3> kLemmaNames = {"eval_sum_inst", "eval_sum_inst_commute",
                                                         "sum_merge"};

// Variables are drawn from {1..kMaxVar}; polynomials use at most 4 of them.
constexpr VarId kMaxVar = 6;
constexpr std::size_t kMaxArity = 4;

}  // namespace

std::string_view law_name(Law law) { return kLawNames[static_cast<std::size_t>(law)]; }
std::string_view lemma_name(DerivedLemma lemma) { return kLemmaNames[static_cast<std::size_t>(lemma)]; }

std::optional<Law> parse_law(std::string_view name) {
  for (std::size_t i = 0; i < kLawNames.size(); ++i) {
    if (kLawNames[i] == name) return kAllLaws[i];
  }
  return std::nullopt;
}

std::optional<DerivedLemma> parse_lemma(std::string_view name) {
  for (std::size_t i = 0; i < kLemmaNames.size(); ++i) {
    if (kLemmaNames[i] == name) return kAllLemmas[i];
  }
  return std::nullopt;
}

Json to_json(const LawReport& r) {
  return Json{{"cases", r.cases},
              {"counterexample", r.counterexample},
              {"law", r.law},
              {"status", r.passed ? "pass" : "fail"}};
}

std::set<VarId> MPolyKit::random_vars(SplitMix64& rng) const {
  return random_var_set(rng, kMaxVar, 3);
}

VarId MPolyKit::fresh_var(SplitMix64& rng, const std::set<VarId>& avoid) const {
  for (;;) {
    const auto v = static_cast<VarId>(1 + rng.below(kMaxVar + 1));
    if (!avoid.contains(v)) return v;
  }
}

MultiPoly MPolyKit::random_poly(SplitMix64& rng, const std::set<VarId>& pool) const {
  std::vector<VarId> vars(pool.begin(), pool.end());
  // Shuffle then truncate so larger pools still yield arity <= 4.
  for (std::size_t i = vars.size(); i > 1; --i) std::swap(vars[i - 1], vars[rng.below(i)]);
  if (vars.size() > kMaxArity) vars.resize(kMaxArity);
  return sumcheck::random_poly(rng, s_.field(), vars);
}

MultiPoly MPolyKit::random_univariate(SplitMix64& rng, VarId x, std::uint32_t max_degree) const {
  return sumcheck::random_univariate(rng, s_.field(), x, max_degree);
}

Substitution MPolyKit::random_subst(SplitMix64& rng, const std::set<VarId>& domain) const {
  return random_substitution(rng, s_.field(), domain);
}

FieldElement MPolyKit::random_arg(SplitMix64& rng) const { return random_element(rng, s_.field()); }

std::vector<FieldElement> MPolyKit::random_values(SplitMix64& rng) const {
  return random_subset(rng, s_.field(), 3);
}

Json MPolyKit::context() const { return Json{{"modulus", s_.field().value()}}; }
Json MPolyKit::describe(const MultiPoly& p) const { return poly_to_json(p); }
Json MPolyKit::describe(const Substitution& s) const { return subst_to_json(s); }
Json MPolyKit::describe(const FieldElement& e) const { return e.value(); }

Json MPolyKit::describe(const std::vector<FieldElement>& values) const {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.value());
  return out;
}

MPolyKit default_kit_for_case(SplitMix64& rng) {
  return MPolyKit(Modulus(kConformanceModuli[rng.below(kConformanceModuli.size())]));
}

LawReport check_axiom(Law law, std::uint64_t cases, std::uint64_t seed) {
  return check_axiom<MPolyKit>(law, cases, seed, default_kit_for_case);
}

LawReport check_derived_lemma(DerivedLemma lemma, std::uint64_t cases, std::uint64_t seed) {
  return check_derived_lemma<MPolyKit>(lemma, cases, seed, default_kit_for_case);
}

std::vector<LawReport> check_all(std::uint64_t cases, std::uint64_t seed) {
  return check_all<MPolyKit>(cases, seed, default_kit_for_case);
}

}  // namespace sumcheck

#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sumcheck/rng.hpp"
#include "sumcheck/serialize.hpp"
#include "sumcheck/structure.hpp"

namespace sumcheck {

/// The eleven structure axioms.
enum class Law {
  kVarsFinite,
  kVarsZero,
  kVarsAdd,
  kVarsInst,
  kDegZero,
  kDegAdd,
  kDegInst,
  kEvalZero,
  kEvalAdd,
  kEvalInst,
  kRoots,
};

/// Consequences of the axioms about sums of instantiations.
enum class DerivedLemma { kEvalSumInst, kEvalSumInstCommute, kSumMerge };

inline constexpr std::array<Law, 11> kAllLaws = {
    Law::kVarsFinite, Law::kVarsZero, Law::kVarsAdd,  Law::kVarsInst, Law::kDegZero, Law::kDegAdd,
    Law::kDegInst,    Law::kEvalZero, Law::kEvalAdd,  Law::kEvalInst, Law::kRoots};
inline constexpr std::array<DerivedLemma, 3> kAllLemmas = {
    DerivedLemma::kEvalSumInst, DerivedLemma::kEvalSumInstCommute, DerivedLemma::kSumMerge};

std::string_view law_name(Law law);
std::string_view lemma_name(DerivedLemma lemma);
std::optional<Law> parse_law(std::string_view name);
std::optional<DerivedLemma> parse_lemma(std::string_view name);

/// Outcome of checking one law. `counterexample` is null on success, else it
/// carries the case seed plus every input needed to replay the failure.
struct LawReport {
  std::string law;
  std::uint64_t cases = 0;
  bool passed = true;
  Json counterexample;
};

Json to_json(const LawReport& r);

/// Random-input source and pretty-printer for one structure instance.
template <class K>
concept ConformanceKit =
    PolynomialStructure<typename K::Structure> &&
    requires(const K& k, SplitMix64& rng, const std::set<typename K::Structure::Var>& vs,
             const typename K::Structure::Var& x, const typename K::Structure::Poly& p,
             const typename K::Structure::Subst& sub, const typename K::Structure::Result& r,
             const std::vector<typename K::Structure::Arg>& args) {
      { k.structure() } -> std::convertible_to<const typename K::Structure&>;
      { k.random_vars(rng) } -> std::same_as<std::set<typename K::Structure::Var>>;
      { k.fresh_var(rng, vs) } -> std::same_as<typename K::Structure::Var>;
      { k.random_poly(rng, vs) } -> std::same_as<typename K::Structure::Poly>;
      { k.random_univariate(rng, x, std::uint32_t{}) } -> std::same_as<typename K::Structure::Poly>;
      { k.random_subst(rng, vs) } -> std::same_as<typename K::Structure::Subst>;
      { k.random_arg(rng) } -> std::same_as<typename K::Structure::Arg>;
      { k.random_values(rng) } -> std::same_as<std::vector<typename K::Structure::Arg>>;
      { k.context() } -> std::same_as<Json>;
      { k.describe(p) } -> std::same_as<Json>;
      { k.describe(sub) } -> std::same_as<Json>;
      { k.describe(r) } -> std::same_as<Json>;
      { k.describe(args) } -> std::same_as<Json>;
    };

/// Kit for sparse polynomials over one prime field.
class MPolyKit {
 public:
  using Structure = MPolyStructure;

  explicit MPolyKit(Modulus field) : s_(field) {}

  const Structure& structure() const { return s_; }
  std::set<VarId> random_vars(SplitMix64& rng) const;
  VarId fresh_var(SplitMix64& rng, const std::set<VarId>& avoid) const;
  MultiPoly random_poly(SplitMix64& rng, const std::set<VarId>& pool) const;
  MultiPoly random_univariate(SplitMix64& rng, VarId x, std::uint32_t max_degree) const;
  Substitution random_subst(SplitMix64& rng, const std::set<VarId>& domain) const;
  FieldElement random_arg(SplitMix64& rng) const;
  std::vector<FieldElement> random_values(SplitMix64& rng) const;
  Json context() const;
  Json describe(const MultiPoly& p) const;
  Json describe(const Substitution& s) const;
  Json describe(const FieldElement& e) const;
  Json describe(const std::vector<FieldElement>& values) const;

 private:
  MPolyStructure s_;
};

static_assert(ConformanceKit<MPolyKit>);

/// Moduli exercised by the default conformance run.
inline constexpr std::array<std::uint32_t, 6> kConformanceModuli = {2, 3, 5, 7, 11, 13};

/// Picks a modulus from kConformanceModuli per case.
MPolyKit default_kit_for_case(SplitMix64& rng);

namespace detail {

template <class Set>
bool is_subset(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class Set>
Set set_union(const Set& a, const Set& b) {
  Set out = a;
  out.insert(b.begin(), b.end());
  return out;
}

template <class Set>
Set set_minus(const Set& a, const Set& b) {
  Set out;
  for (const auto& x : a) {
    if (!b.contains(x)) out.insert(x);
  }
  return out;
}

template <class Set>
Json describe_vars(const Set& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v);
  return out;
}

/// One randomized instance of an axiom. Returns the counterexample, if any.
template <ConformanceKit K>
std::optional<Json> check_law_case(Law law, const K& kit, SplitMix64& rng) {
  const auto& s = kit.structure();
  Json cx = Json::object();
  cx["context"] = kit.context();
  auto fail = [&](Json observed, Json expected) {
    cx["observed"] = std::move(observed);
    cx["expected"] = std::move(expected);
    return std::optional<Json>(cx);
  };

  switch (law) {
    case Law::kVarsFinite: {
      // vars p is a finite set that fully determines the coverage eval needs.
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto vs = s.vars(p);
      const auto sigma = kit.random_subst(rng, vs);
      cx["p"] = kit.describe(p);
      cx["sigma"] = kit.describe(sigma);
      try {
        (void)s.eval(p, sigma);
      } catch (const std::exception& e) {
        return fail(std::string("eval over vars p failed: ") + e.what(), "evaluable");
      }
      return std::nullopt;
    }
    case Law::kVarsZero: {
      const auto vs = s.vars(s.zero());
      if (!vs.empty()) return fail(describe_vars(vs), Json::array());
      return std::nullopt;
    }
    case Law::kVarsAdd: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto q = kit.random_poly(rng, kit.random_vars(rng));
      const auto lhs = s.vars(s.add(p, q));
      const auto rhs = set_union(s.vars(p), s.vars(q));
      cx["p"] = kit.describe(p);
      cx["q"] = kit.describe(q);
      if (!is_subset(lhs, rhs)) return fail(describe_vars(lhs), describe_vars(rhs));
      return std::nullopt;
    }
    case Law::kVarsInst: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto sigma = kit.random_subst(rng, kit.random_vars(rng));
      const auto lhs = s.vars(s.inst(p, sigma));
      const auto rhs = set_minus(s.vars(p), s.domain(sigma));
      cx["p"] = kit.describe(p);
      cx["sigma"] = kit.describe(sigma);
      if (!is_subset(lhs, rhs)) return fail(describe_vars(lhs), describe_vars(rhs));
      return std::nullopt;
    }
    case Law::kDegZero: {
      const std::uint64_t d = s.deg(s.zero());
      if (d != 0) return fail(d, 0);
      return std::nullopt;
    }
    case Law::kDegAdd: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto q = kit.random_poly(rng, kit.random_vars(rng));
      const std::uint64_t lhs = s.deg(s.add(p, q));
      const std::uint64_t rhs = std::max<std::uint64_t>(s.deg(p), s.deg(q));
      cx["p"] = kit.describe(p);
      cx["q"] = kit.describe(q);
      if (lhs > rhs) return fail(lhs, rhs);
      return std::nullopt;
    }
    case Law::kDegInst: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto sigma = kit.random_subst(rng, kit.random_vars(rng));
      const std::uint64_t lhs = s.deg(s.inst(p, sigma));
      const std::uint64_t rhs = s.deg(p);
      cx["p"] = kit.describe(p);
      cx["sigma"] = kit.describe(sigma);
      if (lhs > rhs) return fail(lhs, rhs);
      return std::nullopt;
    }
    case Law::kEvalZero: {
      const auto sigma = kit.random_subst(rng, kit.random_vars(rng));
      const auto value = s.eval(s.zero(), sigma);
      cx["sigma"] = kit.describe(sigma);
      if (!(value == s.result_zero())) return fail(kit.describe(value), kit.describe(s.result_zero()));
      return std::nullopt;
    }
    case Law::kEvalAdd: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto q = kit.random_poly(rng, kit.random_vars(rng));
      const auto domain = set_union(set_union(s.vars(p), s.vars(q)), kit.random_vars(rng));
      const auto sigma = kit.random_subst(rng, domain);
      cx["p"] = kit.describe(p);
      cx["q"] = kit.describe(q);
      cx["sigma"] = kit.describe(sigma);
      const auto lhs = s.eval(s.add(p, q), sigma);
      const auto rhs = s.result_add(s.eval(p, sigma), s.eval(q, sigma));
      if (!(lhs == rhs)) return fail(kit.describe(lhs), kit.describe(rhs));
      return std::nullopt;
    }
    case Law::kEvalInst: {
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto sigma = kit.random_subst(rng, kit.random_vars(rng));
      const auto rho_domain = set_union(set_minus(s.vars(p), s.domain(sigma)), kit.random_vars(rng));
      const auto rho = kit.random_subst(rng, rho_domain);
      cx["p"] = kit.describe(p);
      cx["sigma"] = kit.describe(sigma);
      cx["rho"] = kit.describe(rho);
      const auto lhs = s.eval(s.inst(p, sigma), rho);
      const auto rhs = s.eval(p, s.update(rho, sigma));
      if (!(lhs == rhs)) return fail(kit.describe(lhs), kit.describe(rhs));
      return std::nullopt;
    }
    case Law::kRoots: {
      // Distinct univariate p, q of degree <= d agree on at most d points of
      // the argument universe; the agreement set is counted exhaustively.
      const auto x = kit.fresh_var(rng, {});
      const auto d = static_cast<std::uint32_t>(rng.below(7));
      const auto p = kit.random_univariate(rng, x, d);
      auto q = kit.random_univariate(rng, x, d);
      for (int attempt = 0; q == p && attempt < 256; ++attempt) q = kit.random_univariate(rng, x, d);
      if (q == p) return std::nullopt;  // no distinct pair drawn; vacuous
      std::uint64_t agree = 0;
      for (const auto& r : s.universe()) {
        const auto at = s.singleton(x, r);
        if (s.eval(p, at) == s.eval(q, at)) ++agree;
      }
      cx["x"] = x;
      cx["d"] = d;
      cx["p"] = kit.describe(p);
      cx["q"] = kit.describe(q);
      if (s.deg(p) > d || s.deg(q) > d) return fail("generator exceeded degree bound", d);
      if (agree > d) return fail(agree, Json{{"at_most", d}});
      return std::nullopt;
    }
  }
  return std::nullopt;
}

template <ConformanceKit K>
std::optional<Json> check_lemma_case(DerivedLemma lemma, const K& kit, SplitMix64& rng) {
  const auto& s = kit.structure();
  using Var = typename K::Structure::Var;
  Json cx = Json::object();
  cx["context"] = kit.context();

  const auto values = kit.random_values(rng);
  cx["H"] = kit.describe(values);

  switch (lemma) {
    case DerivedLemma::kEvalSumInst: {
      // vars p <= V u dom rho  ==>  eval (sum_sigma inst p sigma) rho = sum_sigma eval p (rho ++ sigma)
      const auto p = kit.random_poly(rng, kit.random_vars(rng));
      const auto v_set = kit.random_vars(rng);
      const auto rho = kit.random_subst(rng, set_union(set_minus(s.vars(p), v_set), kit.random_vars(rng)));
      cx["p"] = kit.describe(p);
      cx["V"] = describe_vars(v_set);
      cx["rho"] = kit.describe(rho);
      const auto lhs = s.eval(sum_insts(s, p, v_set, values), rho);
      auto rhs = s.result_zero();
      for (const auto& sigma : substs(s, v_set, values)) rhs = s.result_add(rhs, s.eval(p, s.update(rho, sigma)));
      if (!(lhs == rhs)) {
        cx["observed"] = kit.describe(lhs);
        cx["expected"] = kit.describe(rhs);
        return cx;
      }
      return std::nullopt;
    }
    case DerivedLemma::kEvalSumInstCommute: {
      // vars p <= {x} u V, x not in V  ==>
      //   eval (sum_sigma inst p sigma) [x -> r] = sum_sigma eval (inst p [x -> r]) sigma
      const auto v_set = kit.random_vars(rng);
      const Var x = kit.fresh_var(rng, v_set);
      const auto p = kit.random_poly(rng, set_union(v_set, std::set<Var>{x}));
      const auto r = kit.random_arg(rng);
      cx["p"] = kit.describe(p);
      cx["V"] = describe_vars(v_set);
      cx["x"] = x;
      cx["r"] = kit.describe(std::vector{r});
      const auto at = s.singleton(x, r);
      const auto lhs = s.eval(sum_insts(s, p, v_set, values), at);
      const auto rhs = sum_evals(s, s.inst(p, at), v_set, values);
      if (!(lhs == rhs)) {
        cx["observed"] = kit.describe(lhs);
        cx["expected"] = kit.describe(rhs);
        return cx;
      }
      return std::nullopt;
    }
    case DerivedLemma::kSumMerge: {
      // x not in V  ==>  sum_h sum_sigma eval p ([x -> h] ++ sigma) = sum_{sigma over {x} u V} eval p sigma
      const auto v_set = kit.random_vars(rng);
      const Var x = kit.fresh_var(rng, v_set);
      const auto merged = set_union(v_set, std::set<Var>{x});
      const auto p = kit.random_poly(rng, merged);
      cx["p"] = kit.describe(p);
      cx["V"] = describe_vars(v_set);
      cx["x"] = x;
      auto lhs = s.result_zero();
      for (const auto& h : values) {
        for (const auto& sigma : substs(s, v_set, values)) {
          lhs = s.result_add(lhs, s.eval(p, s.update(s.singleton(x, h), sigma)));
        }
      }
      const auto rhs = sum_evals(s, p, merged, values);
      if (!(lhs == rhs)) {
        cx["observed"] = kit.describe(lhs);
        cx["expected"] = kit.describe(rhs);
        return cx;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

template <class Check>
LawReport run_cases(std::string name, std::uint64_t cases, std::uint64_t seed, Check&& check) {
  LawReport report{std::move(name), 0, true, nullptr};
  for (std::uint64_t i = 0; i < cases; ++i) {
    const auto case_seed = derive_seed(seed, i);
    SplitMix64 rng(case_seed);
    std::optional<Json> cx;
    try {
      cx = check(rng);
    } catch (const std::exception& e) {
      cx = Json{{"exception", e.what()}};
    }
    report.cases = i + 1;
    if (cx) {
      report.passed = false;
      Json full = Json{{"case", i}, {"case_seed", case_seed}};
      for (auto& [k, v] : cx->items()) full[k] = v;
      report.counterexample = std::move(full);
      break;
    }
  }
  return report;
}

}  // namespace detail

/// Runs `cases` randomized instances of `law`. Each case gets its own seed
/// derived from (`seed`, case index); `make_kit` picks the structure instance
/// for the case. Stops at the first counterexample.
template <ConformanceKit K>
LawReport check_axiom(Law law, std::uint64_t cases, std::uint64_t seed,
                      const std::function<K(SplitMix64&)>& make_kit) {
  return detail::run_cases(std::string(law_name(law)), cases, seed, [&](SplitMix64& rng) {
    const K kit = make_kit(rng);
    return detail::check_law_case(law, kit, rng);
  });
}

template <ConformanceKit K>
LawReport check_derived_lemma(DerivedLemma lemma, std::uint64_t cases, std::uint64_t seed,
                              const std::function<K(SplitMix64&)>& make_kit) {
  return detail::run_cases(std::string(lemma_name(lemma)), cases, seed, [&](SplitMix64& rng) {
    const K kit = make_kit(rng);
    return detail::check_lemma_case(lemma, kit, rng);
  });
}

/// All 11 axioms followed by the 3 derived lemmas.
template <ConformanceKit K>
std::vector<LawReport> check_all(std::uint64_t cases, std::uint64_t seed,
                                 const std::function<K(SplitMix64&)>& make_kit) {
  std::vector<LawReport> out;
  std::uint64_t stream = 0;
  for (auto law : kAllLaws) out.push_back(check_axiom<K>(law, cases, derive_seed(seed, stream++), make_kit));
  for (auto lemma : kAllLemmas) {
    out.push_back(check_derived_lemma<K>(lemma, cases, derive_seed(seed, stream++), make_kit));
  }
  return out;
}

/// Field-instance shorthands over kConformanceModuli.
LawReport check_axiom(Law law, std::uint64_t cases, std::uint64_t seed);
LawReport check_derived_lemma(DerivedLemma lemma, std::uint64_t cases, std::uint64_t seed);
std::vector<LawReport> check_all(std::uint64_t cases, std::uint64_t seed);

}  // namespace sumcheck

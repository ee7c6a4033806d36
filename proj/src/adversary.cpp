#include "sumcheck/adversary.hpp"

#include <algorithm>
#include <charconv>

#include "sumcheck/random_poly.hpp"
#include "sumcheck/unipoly.hpp"

namespace sumcheck {

namespace {

struct RoundView {
  MPolyStructure s;
  MultiPoly honest;
  FieldElement discrepancy;
};

RoundView inspect(const SumcheckInstance& inst, VarId x, const std::vector<VarId>& xs) {
  const MPolyStructure s(inst.p.modulus());
  auto q = honest_message(s, inst, x, xs);
  const auto delta = inst.v - sum_over_h(s, q, x, inst.H);
  return {s, std::move(q), delta};
}

FieldElement h_size_inverse(const SumcheckInstance& inst) {
  const FieldElement size(static_cast<std::int64_t>(inst.H.size()), inst.p.modulus());
  if (size.is_zero()) throw PreconditionError("H size not invertible modulo p");
  return size.inverse();
}

// The three round checks hold for every message an adversary sends.
void assert_valid(const RoundView& view, const SumcheckInstance& inst, VarId x, const MultiPoly& msg) {
  const auto vs = vars(msg);
  if (!(vs.empty() || vs == std::set<VarId>{x})) throw std::logic_error("adversary message fails variable check");
  if (total_degree(msg) > total_degree(inst.p)) throw std::logic_error("adversary message fails degree check");
  if (sum_over_h(view.s, msg, x, inst.H) != inst.v) {
    throw std::logic_error("adversary message fails evaluation check");
  }
}

ProverState advance(const ProverState& state, FieldElement delta, std::string note) {
  ProverState next = state;
  ++next.round;
  next.discrepancy = delta;
  next.note = std::move(note);
  return next;
}

std::string describe_roots(const std::vector<FieldElement>& roots) {
  std::string out = "planted roots {";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    out += (i ? "," : "") + std::to_string(roots[i].value());
  }
  return out + "}";
}

}  // namespace

std::pair<MultiPoly, std::vector<FieldElement>> find_correction(const std::vector<FieldElement>& H, VarId x,
                                                                std::uint32_t max_roots,
                                                                std::uint64_t search_budget) {
  if (H.empty()) throw PreconditionError("H must be nonempty");
  const Modulus m = H.front().modulus();
  const auto field = enumerate_field(m);
  const std::uint32_t top = std::min<std::uint64_t>(max_roots, m.value());

  std::uint64_t examined = 0;
  for (std::uint32_t k = top; k >= 1 && examined < search_budget; --k) {
    // Lexicographic k-subsets of {0, ..., p-1} as index vectors.
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      if (examined++ >= search_budget) break;
      FieldElement total = FieldElement::zero(m);
      for (const auto& h : H) {
        FieldElement prod = FieldElement::one(m);
        for (auto i : idx) prod *= h - field[i];
        total += prod;
      }
      if (!total.is_zero()) {
        UniPoly c(m);
        c.add_term(0, total.inverse());
        std::vector<FieldElement> roots;
        for (auto i : idx) {
          c = multiply(c, linear_factor(field[i]));
          roots.push_back(field[i]);
        }
        return {from_uni(c, x), std::move(roots)};
      }
      // Advance to the next combination.
      std::int64_t pos = static_cast<std::int64_t>(k) - 1;
      while (pos >= 0 && idx[pos] == m.value() - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (std::uint32_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  const FieldElement size(static_cast<std::int64_t>(H.size()), m);
  if (size.is_zero()) throw PreconditionError("H size not invertible modulo p");
  return {MultiPoly::constant(size.inverse()), {}};
}

std::pair<MultiPoly, ProverState> sum_fix_constant_message(const SumcheckInstance& inst, VarId x,
                                                           const std::vector<VarId>& xs, FieldElement /*r*/,
                                                           const ProverState& state) {
  const auto inv_size = h_size_inverse(inst);
  const auto view = inspect(inst, x, xs);
  auto msg = view.honest + MultiPoly::constant(view.discrepancy * inv_size);
  assert_valid(view, inst, x, msg);
  return {std::move(msg), advance(state, view.discrepancy, "")};
}

std::pair<MultiPoly, ProverState> root_planting_message(const SumcheckInstance& inst, VarId x,
                                                        const std::vector<VarId>& xs, FieldElement /*r*/,
                                                        const ProverState& state, std::uint32_t root_budget) {
  if (root_budget == 0) throw std::invalid_argument("root budget must be at least 1");
  (void)h_size_inverse(inst);
  const auto view = inspect(inst, x, xs);
  if (view.discrepancy.is_zero()) {
    assert_valid(view, inst, x, view.honest);
    return {view.honest, advance(state, view.discrepancy, "")};
  }
  const auto max_roots = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(root_budget, total_degree(inst.p)));
  auto [c, roots] = find_correction(inst.H, x, max_roots);
  auto msg = view.honest + c.scaled(view.discrepancy);
  assert_valid(view, inst, x, msg);
  std::string note = roots.empty() ? "fallback: sum-fix (no admissible root set)" : describe_roots(roots);
  return {std::move(msg), advance(state, view.discrepancy, std::move(note))};
}

std::pair<MultiPoly, ProverState> random_valid_message(const SumcheckInstance& inst, VarId x,
                                                       const std::vector<VarId>& xs, FieldElement /*r*/,
                                                       const ProverState& state, std::uint64_t seed) {
  const auto inv_size = h_size_inverse(inst);
  const auto view = inspect(inst, x, xs);
  const Modulus m = inst.p.modulus();
  SplitMix64 rng(derive_seed(seed, state.round));
  MultiPoly msg(m);
  const auto degree = total_degree(inst.p);
  for (std::uint64_t e = 0; e <= degree; ++e) {
    msg.add_term(Monomial::variable(x, static_cast<std::uint32_t>(e)), random_element(rng, m));
  }
  const auto shift = (inst.v - sum_over_h(view.s, msg, x, inst.H)) * inv_size;
  msg += MultiPoly::constant(shift);
  assert_valid(view, inst, x, msg);
  return {std::move(msg), advance(state, view.discrepancy, "")};
}

std::pair<MultiPoly, ProverState> SumFixProver::next_message(const SumcheckInstance& inst, VarId x,
                                                             const std::vector<VarId>& xs, FieldElement r,
                                                             const ProverState& state) const {
  return sum_fix_constant_message(inst, x, xs, r, state);
}

RootPlantingProver::RootPlantingProver(std::uint32_t root_budget) : root_budget_(root_budget) {
  if (root_budget == 0) throw std::invalid_argument("root budget must be at least 1");
}

std::pair<MultiPoly, ProverState> RootPlantingProver::next_message(const SumcheckInstance& inst, VarId x,
                                                                   const std::vector<VarId>& xs, FieldElement r,
                                                                   const ProverState& state) const {
  return root_planting_message(inst, x, xs, r, state, root_budget_);
}

std::pair<MultiPoly, ProverState> RandomValidProver::next_message(const SumcheckInstance& inst, VarId x,
                                                                  const std::vector<VarId>& xs, FieldElement r,
                                                                  const ProverState& state) const {
  return random_valid_message(inst, x, xs, r, state, seed_);
}

std::unique_ptr<ProverStrategy> make_adversary(const AdversaryKind& kind) {
  return std::visit(
      [](const auto& k) -> std::unique_ptr<ProverStrategy> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, SumFixConstant>) {
          return std::make_unique<SumFixProver>();
        } else if constexpr (std::is_same_v<K, RootPlanting>) {
          return std::make_unique<RootPlantingProver>(k.root_budget);
        } else {
          return std::make_unique<RandomValidProver>(k.seed);
        }
      },
      kind);
}

std::unique_ptr<ProverStrategy> make_prover(std::string_view spec) {
  if (spec == "honest") return std::make_unique<HonestProver>();
  if (spec == "sum-fix") return std::make_unique<SumFixProver>();
  if (spec == "root-plant") return std::make_unique<RootPlantingProver>();
  constexpr std::string_view kRandom = "random:";
  if (spec.starts_with(kRandom)) {
    const auto digits = spec.substr(kRandom.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return std::make_unique<RandomValidProver>(seed);
    }
  }
  throw std::invalid_argument("unknown prover '" + std::string(spec) +
                              "' (expected honest, sum-fix, root-plant or random:<seed>)");
}

}  // namespace sumcheck

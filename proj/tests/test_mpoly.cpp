#include <gtest/gtest.h>

#include "sumcheck/mpoly.hpp"
#include "sumcheck/random_poly.hpp"
#include "sumcheck/serialize.hpp"
#include "sumcheck/unipoly.hpp"

using namespace sumcheck;

namespace {

const Modulus k101(101);

// 3*x1^2*x2*x3 + 2*x1*x3 + x3^2 over F_101.
MultiPoly running_example() {
  return MultiPoly(k101, {{Monomial{{1, 2}, {2, 1}, {3, 1}}, 3}, {Monomial{{1, 1}, {3, 1}}, 2}, {Monomial{{3, 2}}, 1}});
}

FieldElement f(std::int64_t v, Modulus m = k101) { return FieldElement(v, m); }

}  // namespace

TEST(RunningExample, Evaluation) {
  const Substitution sigma{{1, f(3)}, {2, f(1)}, {3, f(2)}};
  EXPECT_EQ(eval(running_example(), sigma), f(70));
}

TEST(RunningExample, DegreeAndVariables) {
  EXPECT_EQ(total_degree(running_example()), 4u);
  EXPECT_EQ(vars(running_example()), (std::set<VarId>{1, 2, 3}));
}

TEST(RunningExample, PartialInstantiation) {
  const Substitution sigma{{1, f(3)}, {2, f(1)}};
  const MultiPoly expected(k101, {{Monomial{{3, 1}}, 33}, {Monomial{{3, 2}}, 1}});
  EXPECT_EQ(inst(running_example(), sigma), expected);
  EXPECT_EQ(inst_mon_coeff(Monomial{{1, 2}, {2, 1}, {3, 1}}, sigma, k101), f(9));
  EXPECT_EQ(inst_mon_resid(Monomial{{1, 2}, {2, 1}, {3, 1}}, sigma), Monomial::variable(3));
}

TEST(Monomial, NormalizesEntries) {
  const Monomial m{{2, 1}, {1, 0}, {2, 2}, {3, 1}};
  EXPECT_EQ(m.entries(), (std::vector<Monomial::Entry>{{2, 3}, {3, 1}}));
  EXPECT_EQ(m.total_degree(), 4u);
  EXPECT_EQ(m.exponent(1), 0u);
  EXPECT_TRUE((Monomial{{4, 0}}.is_one()));
}

TEST(Monomial, CanonicalOrder) {
  const Monomial one, x1 = Monomial::variable(1), x2 = Monomial::variable(2);
  const Monomial x1sq = Monomial::variable(1, 2), x1x2{{1, 1}, {2, 1}}, x2sq = Monomial::variable(2, 2);
  EXPECT_LT(one, x1);
  EXPECT_LT(x1, x2);
  EXPECT_LT(x2, x1sq);
  EXPECT_LT(x1sq, x1x2);
  EXPECT_LT(x1x2, x2sq);
  EXPECT_FALSE(x1 < x1);
}

TEST(MultiPoly, CancelledTermsDisappear) {
  MultiPoly p(Modulus(5), {{Monomial::variable(1), 2}, {Monomial::variable(1), 3}});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(total_degree(p), 0u);
  EXPECT_TRUE(vars(p).empty());
  MultiPoly q = MultiPoly::variable(1, Modulus(5));
  EXPECT_TRUE((q - q).is_zero());
}

TEST(MultiPoly, CoefficientsReduced) {
  const MultiPoly p(Modulus(7), {{Monomial{}, -1}, {Monomial::variable(2), 15}});
  EXPECT_EQ(p.coeff(Monomial{}), f(6, Modulus(7)));
  EXPECT_EQ(p.coeff(Monomial::variable(2)), f(1, Modulus(7)));
  EXPECT_EQ(p.coeff(Monomial::variable(3)), f(0, Modulus(7)));
}

TEST(MultiPoly, MixedFieldsRejected) {
  EXPECT_THROW(MultiPoly::variable(1, Modulus(5)) + MultiPoly::variable(1, Modulus(7)), ModulusMismatch);
}

TEST(Eval, UncoveredVariableIsAnError) {
  try {
    eval(running_example(), Substitution{{1, f(1)}, {3, f(1)}});
    FAIL() << "expected UncoveredVariable";
  } catch (const UncoveredVariable& e) {
    EXPECT_EQ(e.variable(), 2u);
  }
}

TEST(Eval, ExtraAssignmentsIgnored) {
  const Substitution sigma{{1, f(3)}, {2, f(1)}, {3, f(2)}, {9, f(50)}};
  EXPECT_EQ(eval(running_example(), sigma), f(70));
}

TEST(Inst, EmptySubstitutionIsIdentity) {
  EXPECT_EQ(inst(running_example(), Substitution{}), running_example());
}

TEST(Inst, CollapseToZero) {
  const Modulus m(5);
  const MultiPoly p(m, {{Monomial{{1, 1}, {2, 1}}, 1}});
  const auto q = inst(p, Substitution::single(1, f(0, m)));
  EXPECT_TRUE(q.is_zero());
  EXPECT_TRUE(vars(q).empty());
}

TEST(Inst, AgreesWithEvalOnRandomInputs) {
  SplitMix64 rng(77);
  for (int i = 0; i < 500; ++i) {
    const Modulus m(std::array<std::uint64_t, 5>{2, 3, 5, 7, 13}[rng.below(5)]);
    const auto p = random_poly(rng, m, {1, 2, 3, 4});
    const auto sigma = random_substitution(rng, m, random_var_set(rng, 4, 4));
    const auto rho = random_substitution(rng, m, {1, 2, 3, 4});
    EXPECT_EQ(eval(inst(p, sigma), rho), eval(p, Substitution::update(rho, sigma)));
    for (auto v : vars(inst(p, sigma))) EXPECT_FALSE(sigma.contains(v));
    EXPECT_LE(total_degree(inst(p, sigma)), total_degree(p));
  }
}

TEST(Substitution, UpdatePrefersRightOperand) {
  const Modulus m(5);
  const Substitution rho{{1, f(1, m)}, {2, f(2, m)}};
  const Substitution sigma{{2, f(4, m)}, {3, f(3, m)}};
  const auto merged = Substitution::update(rho, sigma);
  EXPECT_EQ(merged, (Substitution{{1, f(1, m)}, {2, f(4, m)}, {3, f(3, m)}}));
}

TEST(Substitution, RejectsForeignField) {
  Substitution s{{1, f(1, Modulus(5))}};
  EXPECT_THROW(s.assign(2, f(1, Modulus(7))), ModulusMismatch);
}

TEST(ToString, ReadableForm) {
  EXPECT_EQ(to_string(running_example()), "2*x1*x3 + x3^2 + 3*x1^2*x2*x3");
  EXPECT_EQ(to_string(MultiPoly::zero(k101)), "0");
}

TEST(Serialize, RoundTrip) {
  SplitMix64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Modulus m(13);
    const auto p = random_poly(rng, m, {1, 2, 3});
    EXPECT_EQ(poly_from_json(poly_to_json(p), m), p);
  }
}

TEST(Serialize, CanonicalTermOrder) {
  EXPECT_EQ(poly_to_json(running_example()).dump(),
            R"([{"coeff":2,"exps":{"1":1,"3":1}},{"coeff":1,"exps":{"3":2}},)"
            R"({"coeff":3,"exps":{"1":2,"2":1,"3":1}}])");
}

TEST(Serialize, RejectsMalformedTerms) {
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"coeff":1}])"), k101), DocumentError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"coeff":1})"), k101), DocumentError);
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"coeff":1,"exps":{"x":1}}])"), k101), DocumentError);
}

TEST(UniPoly, RootCounts) {
  EXPECT_EQ(roots_count(UniPoly(Modulus(5), {{2, 1}, {0, -1}})), 2u);
  EXPECT_EQ(roots_count(UniPoly(Modulus(7), {{2, 1}, {0, 1}})), 0u);
  EXPECT_THROW(roots_count(UniPoly(Modulus(7))), std::invalid_argument);
}

TEST(UniPoly, RootOrder) {
  const Modulus m(7);
  // (x - 1)^2 (x - 2)
  const auto q = multiply(multiply(linear_factor(f(1, m)), linear_factor(f(1, m))), linear_factor(f(2, m)));
  EXPECT_EQ(q.degree(), 3u);
  EXPECT_EQ(root_order(q, f(1, m)), 2u);
  EXPECT_EQ(root_order(q, f(2, m)), 1u);
  EXPECT_EQ(root_order(q, f(3, m)), 0u);
  EXPECT_EQ(roots_count(q), 2u);
}

TEST(UniPoly, ConversionRoundTrip) {
  const Modulus m(11);
  const MultiPoly p(m, {{Monomial{}, 4}, {Monomial::variable(3, 2), 5}});
  const auto u = to_uni(p, 3);
  EXPECT_EQ(u.degree(), 2u);
  EXPECT_EQ(from_uni(u, 3), p);
  for (std::int64_t a = 0; a < 11; ++a) {
    EXPECT_EQ(uni_eval(u, f(a, m)), eval(p, Substitution::single(3, f(a, m))));
  }
  EXPECT_THROW(to_uni(running_example(), 3), NotUnivariate);
}

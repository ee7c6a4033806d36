#include "sumcheck/unipoly.hpp"

#include <sstream>
#include <vector>

namespace sumcheck {

namespace {

std::string describe(const std::set<VarId>& vs) {
  std::ostringstream os;
  bool first = true;
  for (auto v : vs) {
    os << (first ? "" : ", ") << 'x' << v;
    first = false;
  }
  return os.str();
}

void require_nonzero(const UniPoly& q, const char* what) {
  if (q.is_zero()) {
    throw std::invalid_argument(std::string(what) + ": zero polynomial (every point is a root)");
  }
}

}  // namespace

NotUnivariate::NotUnivariate(VarId expected, const std::set<VarId>& extra)
    : std::invalid_argument("polynomial is not univariate in x" + std::to_string(expected) +
                            "; extra variables: " + describe(extra)) {}

UniPoly::UniPoly(Modulus m, std::initializer_list<std::pair<std::uint32_t, std::int64_t>> coeffs)
    : modulus_(m) {
  for (const auto& [e, c] : coeffs) add_term(e, FieldElement(c, m));
}

std::uint32_t UniPoly::degree() const noexcept {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

FieldElement UniPoly::coeff(std::uint32_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? FieldElement::zero(modulus_) : it->second;
}

void UniPoly::add_term(std::uint32_t exponent, FieldElement c) {
  if (c.modulus() != modulus_) throw ModulusMismatch(modulus_.value(), c.prime());
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

UniPoly to_uni(const MultiPoly& p, VarId v) {
  auto vs = vars(p);
  vs.erase(v);
  if (!vs.empty()) throw NotUnivariate(v, vs);
  UniPoly q(p.modulus());
  for (const auto& [m, c] : p.terms()) q.add_term(m.exponent(v), c);
  return q;
}

MultiPoly from_uni(const UniPoly& q, VarId v) {
  MultiPoly p(q.modulus());
  for (const auto& [e, c] : q.coeffs()) p.add_term(Monomial::variable(v, e), c);
  return p;
}

FieldElement uni_eval(const UniPoly& q, FieldElement a) {
  FieldElement acc = FieldElement::zero(q.modulus());
  if (q.is_zero()) return acc;
  // Sparse Horner: walk exponents downwards, multiplying by a^gap.
  std::uint32_t prev = q.degree();
  for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) {
    acc = acc * a.pow(prev - it->first) + it->second;
    prev = it->first;
  }
  return acc * a.pow(prev);
}

std::uint64_t roots_count(const UniPoly& q) {
  require_nonzero(q, "roots_count");
  std::uint64_t n = 0;
  for (const auto& a : enumerate_field(q.modulus())) {
    if (uni_eval(q, a).is_zero()) ++n;
  }
  return n;
}

std::uint32_t root_order(const UniPoly& q, FieldElement a) {
  require_nonzero(q, "root_order");
  const auto field = q.modulus();
  // Dense coefficients, lowest degree first.
  std::vector<FieldElement> c(q.degree() + 1, FieldElement::zero(field));
  for (const auto& [e, k] : q.coeffs()) c[e] = k;

  std::uint32_t order = 0;
  while (c.size() > 1) {
    // Synthetic division by (x - a): quotient b, remainder r.
    std::vector<FieldElement> b(c.size() - 1, FieldElement::zero(field));
    FieldElement carry = FieldElement::zero(field);
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * a;
      b[i - 1] = carry;
    }
    const FieldElement remainder = c[0] + carry * a;
    if (!remainder.is_zero()) break;
    ++order;
    c = std::move(b);
  }
  return order;
}

UniPoly multiply(const UniPoly& a, const UniPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch(a.modulus().value(), b.modulus().value());
  UniPoly out(a.modulus());
  for (const auto& [ea, ca] : a.coeffs()) {
    for (const auto& [eb, cb] : b.coeffs()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

UniPoly linear_factor(FieldElement a) {
  UniPoly f(a.modulus());
  f.add_term(1, FieldElement::one(a.modulus()));
  f.add_term(0, -a);
  return f;
}

}  // namespace sumcheck

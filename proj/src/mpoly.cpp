#include "sumcheck/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace sumcheck {

UncoveredVariable::UncoveredVariable(VarId v)
    : std::invalid_argument("substitution does not cover variable x" + std::to_string(v)),
      var_(v) {}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<Entry> entries) : entries_(entries) { canonicalize(); }

Monomial::Monomial(std::vector<Entry> entries) : entries_(std::move(entries)) { canonicalize(); }

void Monomial::canonicalize() {
  std::sort(entries_.begin(), entries_.end());
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const auto& [v, e] : entries_) {
    if (!merged.empty() && merged.back().first == v) {
      merged.back().second += e;
    } else {
      merged.emplace_back(v, e);
    }
  }
  std::erase_if(merged, [](const Entry& en) { return en.second == 0; });
  entries_ = std::move(merged);
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

std::set<VarId> Monomial::keys() const {
  std::set<VarId> out;
  for (const auto& [v, e] : entries_) out.insert(v);
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.entries_.begin();
  auto ib = b.entries_.begin();
  while (ia != a.entries_.end() || ib != b.entries_.end()) {
    const VarId va = ia != a.entries_.end() ? ia->first : UINT32_MAX;
    const VarId vb = ib != b.entries_.end() ? ib->first : UINT32_MAX;
    const VarId v = std::min(va, vb);
    const std::uint32_t ea = va == v ? ia->second : 0;
    const std::uint32_t eb = vb == v ? ib->second : 0;
    if (ea != eb) return ea > eb;
    if (va == v) ++ia;
    if (vb == v) ++ib;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Substitution

Substitution::Substitution(std::initializer_list<std::pair<VarId, FieldElement>> entries) {
  for (const auto& [v, x] : entries) assign(v, x);
}

void Substitution::assign(VarId v, FieldElement value) {
  if (!map_.empty()) {
    const auto p = map_.begin()->second.prime();
    if (p != value.prime()) throw ModulusMismatch(p, value.prime());
  }
  map_.insert_or_assign(v, value);
}

std::optional<FieldElement> Substitution::lookup(VarId v) const {
  auto it = map_.find(v);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

std::set<VarId> Substitution::domain() const {
  std::set<VarId> out;
  for (const auto& [v, x] : map_) out.insert(v);
  return out;
}

Substitution Substitution::update(const Substitution& rho, const Substitution& sigma) {
  Substitution out = rho;
  for (const auto& [v, x] : sigma.map_) out.assign(v, x);
  return out;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(Modulus m, std::initializer_list<std::pair<Monomial, std::int64_t>> terms)
    : modulus_(m) {
  for (const auto& [mono, c] : terms) add_term(mono, FieldElement(c, m));
}

MultiPoly::MultiPoly(Modulus m, const std::vector<std::pair<Monomial, std::int64_t>>& terms)
    : modulus_(m) {
  for (const auto& [mono, c] : terms) add_term(mono, FieldElement(c, m));
}

MultiPoly MultiPoly::constant(FieldElement c) {
  MultiPoly p(c.modulus());
  p.add_term(Monomial{}, c);
  return p;
}

MultiPoly MultiPoly::variable(VarId v, Modulus m) {
  MultiPoly p(m);
  p.add_term(Monomial::variable(v), FieldElement::one(m));
  return p;
}

void MultiPoly::require_same(Modulus other) const {
  if (other != modulus_) throw ModulusMismatch(modulus_.value(), other.value());
}

FieldElement MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(modulus_) : it->second;
}

void MultiPoly::add_term(const Monomial& m, FieldElement c) {
  require_same(c.modulus());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same(rhs.modulus_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  MultiPoly out = *this;
  out += rhs;
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(modulus_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::scaled(FieldElement c) const {
  require_same(c.modulus());
  MultiPoly out(modulus_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

// ---------------------------------------------------------------------------
// Structure functions

std::set<VarId> vars(const MultiPoly& p) {
  std::set<VarId> out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) out.insert(v);
  }
  return out;
}

std::uint64_t total_degree(const MultiPoly& p) {
  std::uint64_t d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m.total_degree());
  return d;
}

FieldElement eval(const MultiPoly& p, const Substitution& sigma) {
  const auto field = p.modulus();
  FieldElement acc = FieldElement::zero(field);
  for (const auto& [m, c] : p.terms()) {
    FieldElement term = c;
    for (const auto& [v, e] : m.entries()) {
      auto value = sigma.lookup(v);
      if (!value) throw UncoveredVariable(v);
      term *= value->pow(e);
    }
    acc += term;
  }
  return acc;
}

FieldElement inst_mon_coeff(const Monomial& m, const Substitution& sigma, Modulus field) {
  FieldElement acc = FieldElement::one(field);
  for (const auto& [v, e] : m.entries()) {
    if (auto value = sigma.lookup(v)) acc *= value->pow(e);
  }
  return acc;
}

Monomial inst_mon_resid(const Monomial& m, const Substitution& sigma) {
  std::vector<Monomial::Entry> kept;
  for (const auto& entry : m.entries()) {
    if (!sigma.contains(entry.first)) kept.push_back(entry);
  }
  return Monomial(std::move(kept));
}

MultiPoly inst(const MultiPoly& p, const Substitution& sigma) {
  MultiPoly out(p.modulus());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(inst_mon_resid(m, sigma), c * inst_mon_coeff(m, sigma, p.modulus()));
  }
  return out;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, e] : m.entries()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << v;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c.value();
    } else if (c.value() == 1) {
      os << to_string(m);
    } else {
      os << c.value() << '*' << to_string(m);
    }
  }
  return os.str();
}

}  // namespace sumcheck

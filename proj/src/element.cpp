#include "diamond/element.hpp"

#include <algorithm>

#include "diamond/errors.hpp"

namespace diamond {

Element Element::monomial(Field field, const Monomial& m) {
  Element e(field);
  e.terms_.emplace(m, Scalar::one(field));
  return e;
}

Element Element::term(const Monomial& m, const Scalar& c) {
  Element e(c.field());
  if (!c.is_zero()) e.terms_.emplace(m, c);
  return e;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
  if (!(c.field() == field_)) {
    if (!terms_.empty()) {
      throw TheoryMismatch("elements over different coefficient fields");
    }
    field_ = c.field();
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::adopt_field(const Element& rhs) {
  if (field_ == rhs.field_) return;
  if (rhs.terms_.empty()) return;
  if (!terms_.empty()) {
    throw TheoryMismatch("elements over different coefficient fields");
  }
  field_ = rhs.field_;
}

Element& Element::operator+=(const Element& rhs) {
  adopt_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  adopt_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (!terms_.empty() && !(c.field() == field_)) {
    throw TheoryMismatch("scalar from a different coefficient field");
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& [m, x] : e.terms_) x = -x;
  return e;
}

std::vector<Monomial> leading_monomials(const MonomialOrder& order,
                                        const Element& a) {
  std::vector<Monomial> out;
  for (const auto& [m, c] : a.terms()) {
    bool maximal = true;
    for (const auto& [n, d] : a.terms()) {
      if (order.compare(n, m) == Relation::Greater) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), DescendingBy{&order});
  return out;
}

std::vector<std::pair<Monomial, Scalar>> sorted_terms(
    const MonomialOrder& order, const Element& a) {
  std::vector<std::pair<Monomial, Scalar>> out(a.terms().begin(),
                                               a.terms().end());
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return order.total(x.first, y.first) > 0;
  });
  return out;
}

Scalar coefficient_of(const Element& a, const Monomial& m) {
  return a.coefficient(m);
}

Element apply(const Theory& theory, const Context& v, const Element& a) {
  Element out(a.field());
  for (const auto& [m, c] : a.terms()) {
    if (auto img = theory.apply(v, m)) out.add_term(*img, c);
  }
  return out;
}

Element multiply(const Theory& theory, const Element& a, const Element& b) {
  Element out(a.field());
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [n, d] : b.terms()) {
      if (auto p = theory.multiply(m, n)) out.add_term(*p, c * d);
    }
  }
  return out;
}

}  // namespace diamond

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "diamond/monomial.hpp"
#include "diamond/order.hpp"
#include "diamond/scalar.hpp"
#include "diamond/theory.hpp"

namespace diamond {

/// Finite linear combination of monomials with nonzero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;
  explicit Element(Field field) : field_(field) {}

  static Element monomial(Field field, const Monomial& m);
  static Element term(const Monomial& m, const Scalar& c);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  Scalar coefficient(const Monomial& m) const;
  /// Adds c·m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void adopt_field(const Element& rhs);

  Field field_;
  Terms terms_;
};

/// P-maximal support monomials; empty iff a == 0.
std::vector<Monomial> leading_monomials(const MonomialOrder& order,
                                        const Element& a);

/// Terms in descending order of the order's linear extension.
std::vector<std::pair<Monomial, Scalar>> sorted_terms(
    const MonomialOrder& order, const Element& a);

Scalar coefficient_of(const Element& a, const Monomial& m);

/// v(a), dropping terms that become zero paths.
Element apply(const Theory& theory, const Context& v, const Element& a);

/// Product of two elements through the theory's monomial product.
Element multiply(const Theory& theory, const Element& a, const Element& b);

}  // namespace diamond

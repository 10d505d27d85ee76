#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diamond/monomial.hpp"
#include "diamond/theory.hpp"

namespace diamond {

enum class OrderKind {
  Deglex,          // degree, then lexicographic by generator rank
  WeightedDeglex,  // positive weights, then degree, then lexicographic
  Lex,             // pure lexicographic (Commutative only)
  SeriesDeglex,    // arbitrary rational weights, higher weight is greater
  Graded,          // weight only; equal weights are incomparable
};

enum class Relation { Less, Greater, Equal, Incomparable };

const char* to_string(OrderKind kind);
const char* to_string(Relation rel);

/// A monomial order bound to the generator layout of one theory.
///
/// Generators carry a rank; a higher rank is a larger letter. The default
/// ranks make the first declared generator the largest.
class MonomialOrder {
 public:
  /// `rank` must be a permutation of 0..n-1 (empty selects the default).
  /// `weights` has one entry per generator; required for weighted, series
  /// and optional for graded orders.
  static MonomialOrder make(const Theory& theory, OrderKind kind,
                            std::vector<int> rank = {},
                            std::vector<mpq_class> weights = {});

  OrderKind kind() const noexcept { return kind_; }
  TheoryKind theory_kind() const noexcept { return theory_; }
  const std::vector<int>& rank() const noexcept { return rank_; }
  const std::vector<mpq_class>& weights() const noexcept { return weights_; }

  Relation compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Relation::Less;
  }

  /// A total order refining compare(); drives iteration and printing.
  std::strong_ordering total(const Monomial& a, const Monomial& b) const;

  /// Sum of generator weights.
  mpq_class weight(const Monomial& m) const;

  bool is_total() const noexcept { return kind_ != OrderKind::Graded; }
  bool is_well_founded() const;

 private:
  MonomialOrder() = default;

  std::int64_t scaled_weight(const Monomial& m) const;
  int degree(const Monomial& m) const;
  std::strong_ordering tie_break(const Monomial& a, const Monomial& b) const;
  int letter_rank(std::int32_t word_letter) const;

  OrderKind kind_ = OrderKind::Deglex;
  TheoryKind theory_ = TheoryKind::FreeMonoid;
  std::size_t central_ = 0;
  std::vector<int> rank_;
  std::vector<mpq_class> weights_;
  std::vector<std::int64_t> scaled_;  // weights times a common denominator
};

/// Orders monomials descending in the linear extension of an order.
struct DescendingBy {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->total(a, b) > 0;
  }
};

}  // namespace diamond

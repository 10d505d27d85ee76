#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "diamond/element.hpp"
#include "diamond/order.hpp"
#include "diamond/series.hpp"
#include "diamond/theory.hpp"

namespace diamond {

/// Monic rule lead -> lower with every lower monomial strictly below lead.
struct Rule {
  Monomial lead;
  Element lower;

  /// lead - lower
  Element defining(Field field) const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// One simple reduction t_{v,s}: rule index s in context v.
struct SimpleReduction {
  std::size_t rule = 0;
  Context context;

  friend bool operator==(const SimpleReduction&,
                         const SimpleReduction&) = default;
};

struct RewriteStep {
  std::size_t rule = 0;
  Context context;
  Scalar coefficient;  // coefficient of `monomial` before the step
  Monomial monomial;   // v(lead)
};

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

class RewritingSystem {
 public:
  /// Validates every rule; in series mode (order kind SeriesDeglex) the
  /// weights are required and the admission checks must pass.
  RewritingSystem(std::shared_ptr<const Theory> theory, MonomialOrder order,
                  Field field, std::vector<Rule> rules,
                  std::optional<WeightData> weights = std::nullopt);

  const Theory& theory() const noexcept { return *theory_; }
  const std::shared_ptr<const Theory>& theory_ptr() const noexcept {
    return theory_;
  }
  const MonomialOrder& order() const noexcept { return order_; }
  Field field() const noexcept { return field_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::optional<WeightData>& weights() const noexcept {
    return weights_;
  }
  bool series_mode() const noexcept {
    return order_.kind() == OrderKind::SeriesDeglex;
  }

  RewritingSystem with_rules(std::vector<Rule> rules) const;

  /// Throws SystemError naming the offending monomial.
  void validate_rule(const Rule& rule) const;

 private:
  std::shared_ptr<const Theory> theory_;
  MonomialOrder order_;
  Field field_;
  std::vector<Rule> rules_;
  std::optional<WeightData> weights_;
};

/// Monic rule from a nonzero element with a unique P-maximal monomial.
Rule orient(const Element& a, const MonomialOrder& order);

/// Path theory: splits an element by (source, target).
std::vector<Element> uniform_components(const Element& a);

/// Every (rule, context) that applies at mu, by rule index then context.
std::vector<SimpleReduction> simple_reductions(const RewritingSystem& sys,
                                               const Monomial& mu);
std::optional<SimpleReduction> first_reduction(const RewritingSystem& sys,
                                               const Monomial& mu);

/// t_{v,s}(b) = b - f_{v(lead)}(b) * v(lead - lower)
Element apply_reduction(const RewritingSystem& sys, const SimpleReduction& t,
                        const Element& b);

std::pair<Element, std::optional<RewriteStep>> reduce_once(
    const RewritingSystem& sys, const Element& a);

struct NormalForm {
  Element value;
  std::vector<RewriteStep> trail;
  std::size_t steps = 0;
};

struct ReductionOptions {
  std::size_t max_steps = kDefaultStepBudget;
  bool record_trail = false;
};

/// Discrete mode only. Throws StepBudgetExceeded when the budget runs out.
NormalForm normal_form(const RewritingSystem& sys, const Element& a,
                       const ReductionOptions& options = {});

/// Replays one trail step.
Element replay(const RewritingSystem& sys, const RewriteStep& step,
               const Element& b);

bool is_irreducible_monomial(const RewritingSystem& sys, const Monomial& mu);

struct IrrDescription {
  enum class Semantics { Factor, Divisibility };
  Semantics semantics = Semantics::Factor;
  /// Minimal leads; a monomial is irreducible iff it avoids all of them.
  std::vector<Monomial> forbidden;
};

IrrDescription irr_description(const RewritingSystem& sys);

/// Irreducible monomials per degree 0..up_to_degree.
std::vector<std::size_t> count_irreducible(const RewritingSystem& sys,
                                           int up_to_degree);

}  // namespace diamond

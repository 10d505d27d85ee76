#include "diamond/rewriting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "diamond/errors.hpp"

namespace diamond {

Element Rule::defining(Field field) const {
  Element e = Element::monomial(field, lead);
  e -= lower;
  return e;
}

RewritingSystem::RewritingSystem(std::shared_ptr<const Theory> theory,
                                 MonomialOrder order, Field field,
                                 std::vector<Rule> rules,
                                 std::optional<WeightData> weights)
    : theory_(std::move(theory)),
      order_(std::move(order)),
      field_(field),
      rules_(std::move(rules)),
      weights_(std::move(weights)) {
  if (!theory_) throw PreconditionError("system without a theory");
  if (order_.theory_kind() != theory_->kind()) {
    throw TheoryMismatch("order built for another theory");
  }
  if (weights_ && weights_->weights.size() != theory_->generator_count()) {
    throw SystemError("weights need one entry per generator");
  }
  for (const auto& r : rules_) validate_rule(r);
  if (series_mode()) {
    if (!weights_) throw SystemError("series order needs weights");
    auto tdcc = check_tdcc(order_, *weights_);
    if (!tdcc.certified) throw SystemError("TDCC not certified: " + tdcc.reason);
    auto eq = check_equicontinuity(*this, *weights_);
    if (!eq.admitted) {
      throw SystemError("rule " + std::to_string(eq.rule + 1) +
                        " is not admissible in series mode: " + eq.violation);
    }
  }
}

RewritingSystem RewritingSystem::with_rules(std::vector<Rule> rules) const {
  return RewritingSystem(theory_, order_, field_, std::move(rules), weights_);
}

void RewritingSystem::validate_rule(const Rule& rule) const {
  const Theory& th = *theory_;
  th.validate(rule.lead);
  if (!rule.lower.is_zero() && !(rule.lower.field() == field_)) {
    throw TheoryMismatch("rule coefficients from another field");
  }
  const std::string name = th.format(rule.lead);
  for (const auto& [m, c] : rule.lower.terms()) {
    th.validate(m);
    if (order_.compare(m, rule.lead) != Relation::Less) {
      throw SystemError("rule " + name + ": lower part not below lead (" +
                        th.format(m) + ")");
    }
    if (th.kind() == TheoryKind::Path && !th.uniform_equivalent(m, rule.lead)) {
      throw SystemError("rule " + name + ": not uniform (" + th.format(m) +
                        " has other endpoints)");
    }
    if (th.kind() == TheoryKind::Mixed && rule.lead.letters().empty() &&
        !m.letters().empty()) {
      throw SystemError("rule " + name +
                        ": a central lead needs a central lower part (" +
                        th.format(m) + ")");
    }
  }
}

Rule orient(const Element& a, const MonomialOrder& order) {
  if (a.is_zero()) {
    throw OrientationError(OrientationError::Reason::ZeroElement,
                           "cannot orient the zero element");
  }
  auto lm = leading_monomials(order, a);
  if (lm.size() != 1) {
    throw OrientationError(OrientationError::Reason::MultipleMaxima,
                           std::to_string(lm.size()) +
                               " incomparable leading monomials");
  }
  Element b = a;
  b *= a.coefficient(lm.front()).inverse();
  Rule r{lm.front(), Element::monomial(a.field(), lm.front())};
  r.lower -= b;
  return r;
}

std::vector<Element> uniform_components(const Element& a) {
  std::map<std::pair<std::int32_t, std::int32_t>, Element> parts;
  for (const auto& [m, c] : a.terms()) {
    auto [it, _] = parts.try_emplace({m.source(), m.target()}, a.field());
    it->second.add_term(m, c);
  }
  std::vector<Element> out;
  for (auto& [k, e] : parts) out.push_back(std::move(e));
  return out;
}

std::vector<SimpleReduction> simple_reductions(const RewritingSystem& sys,
                                               const Monomial& mu) {
  std::vector<SimpleReduction> out;
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    for (auto& c : sys.theory().divisions(mu, sys.rules()[i].lead)) {
      out.push_back({i, std::move(c)});
    }
  }
  return out;
}

std::optional<SimpleReduction> first_reduction(const RewritingSystem& sys,
                                               const Monomial& mu) {
  const Theory& th = sys.theory();
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    const Monomial& lead = sys.rules()[i].lead;
    if (th.kind() != TheoryKind::FreeMagma && th.kind() != TheoryKind::Path &&
        !th.divides(lead, mu)) {
      continue;
    }
    auto ds = th.divisions(mu, lead);
    if (!ds.empty()) return SimpleReduction{i, std::move(ds.front())};
  }
  return std::nullopt;
}

Element apply_reduction(const RewritingSystem& sys, const SimpleReduction& t,
                        const Element& b) {
  const Theory& th = sys.theory();
  const Rule& rule = sys.rules().at(t.rule);
  auto target = th.apply(t.context, rule.lead);
  if (!target) return b;
  Scalar c = b.coefficient(*target);
  if (c.is_zero()) return b;
  Element out = b;
  out.add_term(*target, -c);
  out += c * apply(th, t.context, rule.lower);
  return out;
}

std::pair<Element, std::optional<RewriteStep>> reduce_once(
    const RewritingSystem& sys, const Element& a) {
  for (const auto& [m, c] : sorted_terms(sys.order(), a)) {
    if (auto t = first_reduction(sys, m)) {
      RewriteStep step{t->rule, t->context, c, m};
      return {apply_reduction(sys, *t, a), std::move(step)};
    }
  }
  return {a, std::nullopt};
}

namespace {

// Processes monomials from the top of the linear extension down. Rules only
// produce smaller monomials, so an irreducible monomial, once popped, never
// reappears.
NormalForm reduce_descending(
    const RewritingSystem& sys, const Element& a,
    const ReductionOptions& options,
    const std::function<bool(const Monomial&)>& keep) {
  const Theory& th = sys.theory();
  std::map<Monomial, Scalar, DescendingBy> work(DescendingBy{&sys.order()});
  auto add = [&](const Monomial& m, const Scalar& c) {
    if (!keep(m)) return;
    auto [it, inserted] = work.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [m, c] : a.terms()) add(m, c);

  NormalForm nf{Element(a.field()), {}, 0};
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& m = node.key();
    const Scalar& c = node.mapped();
    auto t = first_reduction(sys, m);
    if (!t) {
      nf.value.add_term(m, c);
      continue;
    }
    if (++nf.steps > options.max_steps) {
      throw StepBudgetExceeded("reduction exceeded " +
                               std::to_string(options.max_steps) + " steps");
    }
    const Rule& rule = sys.rules()[t->rule];
    for (const auto& [n, d] : rule.lower.terms()) {
      if (auto img = th.apply(t->context, n)) add(*img, c * d);
    }
    if (options.record_trail) {
      nf.trail.push_back({t->rule, std::move(t->context), c, m});
    }
  }
  return nf;
}

}  // namespace

NormalForm normal_form(const RewritingSystem& sys, const Element& a,
                       const ReductionOptions& options) {
  if (sys.series_mode()) {
    throw PreconditionError(
        "series systems reduce through truncated_normal_form");
  }
  return reduce_descending(sys, a, options,
                           [](const Monomial&) { return true; });
}

SeriesNormalForm truncated_normal_form(const RewritingSystem& sys,
                                       const Element& a, int precision,
                                       std::size_t max_steps) {
  if (precision < 1) throw PreconditionError("precision must be at least 1");
  WeightData w;
  if (sys.weights()) {
    w = *sys.weights();
  } else {
    w.weights.assign(sys.theory().generator_count(), mpq_class(0));
  }
  auto eq = check_equicontinuity(sys, w);
  if (!eq.admitted) {
    throw PreconditionError("system rejected by the equicontinuity check: " +
                            eq.violation);
  }
  auto tdcc = check_tdcc(sys.order(), w);
  if (!tdcc.certified) {
    throw PreconditionError("TDCC not certified: " + tdcc.reason);
  }
  bool truncated = false;
  auto keep = [&](const Monomial& m) {
    if (w.below_cutoff(m, precision)) {
      truncated = true;
      return false;
    }
    return true;
  };
  ReductionOptions options;
  options.max_steps = max_steps;
  NormalForm nf = reduce_descending(sys, a, options, keep);
  return {std::move(nf.value), precision, truncated, nf.steps};
}

Element replay(const RewritingSystem& sys, const RewriteStep& step,
               const Element& b) {
  return apply_reduction(sys, {step.rule, step.context}, b);
}

bool is_irreducible_monomial(const RewritingSystem& sys, const Monomial& mu) {
  return !first_reduction(sys, mu).has_value();
}

IrrDescription irr_description(const RewritingSystem& sys) {
  const Theory& th = sys.theory();
  IrrDescription d;
  const TheoryKind k = th.kind();
  d.semantics = k == TheoryKind::Commutative || k == TheoryKind::FreeMagma
                    ? IrrDescription::Semantics::Divisibility
                    : IrrDescription::Semantics::Factor;
  std::set<Monomial> leads;
  for (const auto& r : sys.rules()) leads.insert(r.lead);
  for (const auto& m : leads) {
    bool minimal = true;
    for (const auto& n : leads) {
      if (!(n == m) && !th.divisions(m, n).empty()) {
        minimal = false;
        break;
      }
    }
    if (minimal) d.forbidden.push_back(m);
  }
  std::sort(d.forbidden.begin(), d.forbidden.end(), DescendingBy{&sys.order()});
  return d;
}

std::vector<std::size_t> count_irreducible(const RewritingSystem& sys,
                                           int up_to_degree) {
  const Theory& th = sys.theory();
  std::vector<std::size_t> counts(
      static_cast<std::size_t>(std::max(up_to_degree + 1, 0)), 0);
  if (up_to_degree < 0) return counts;

  if (th.kind() == TheoryKind::FreeMonoid || th.kind() == TheoryKind::Path) {
    // Irreducible words are closed under taking prefixes: extend only those.
    std::vector<Monomial> frontier;
    for (const auto& m : th.monomials_of_degree(0)) {
      if (is_irreducible_monomial(sys, m)) frontier.push_back(m);
    }
    counts[0] = frontier.size();
    if (th.kind() == TheoryKind::Path) {
      frontier.clear();
      for (std::size_t a = 0; a < th.generator_count(); ++a) {
        frontier.push_back(th.generator(a));
      }
    }
    for (int d = 1; d <= up_to_degree; ++d) {
      std::vector<Monomial> next;
      if (d == 1 && th.kind() == TheoryKind::Path) {
        next = frontier;
      } else {
        for (const auto& p : frontier) {
          for (std::size_t g = 0; g < th.generator_count(); ++g) {
            if (auto q = th.multiply(p, th.generator(g))) {
              next.push_back(std::move(*q));
            }
          }
        }
      }
      std::erase_if(next, [&](const Monomial& m) {
        return !is_irreducible_monomial(sys, m);
      });
      counts[static_cast<std::size_t>(d)] = next.size();
      frontier = std::move(next);
    }
    return counts;
  }

  for (int d = 0; d <= up_to_degree; ++d) {
    for (const auto& m : th.monomials_of_degree(d)) {
      if (is_irreducible_monomial(sys, m)) ++counts[static_cast<std::size_t>(d)];
    }
  }
  return counts;
}

}  // namespace diamond

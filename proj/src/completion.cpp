#include "diamond/completion.hpp"

#include <map>

#include "diamond/errors.hpp"

namespace diamond {

const char* to_string(ConfluenceStatus s) {
  switch (s) {
    case ConfluenceStatus::Confluent: return "Confluent";
    case ConfluenceStatus::NotConfluent: return "NotConfluent";
    case ConfluenceStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::Complete: return "Complete";
    case CompletionStatus::DegreeCapped: return "DegreeCapped";
    case CompletionStatus::RuleCapped: return "RuleCapped";
  }
  return "?";
}

ConfluenceVerdict check_confluence(const RewritingSystem& sys,
                                   const ConfluenceOptions& options) {
  AmbiguityOptions ao;
  ao.keep_montages = options.check_montages;
  ao.separated_gap = options.separated_gap;
  auto pairs = critical_ambiguities(sys, ao);
  if (options.second_criterion) pairs = second_criterion_filter(sys, pairs);

  ConfluenceVerdict v;
  bool truncated = false;
  for (const auto& amb : pairs) {
    ResolutionCertificate cert;
    try {
      cert = resolve(sys, amb, options.max_steps, options.precision);
    } catch (const StepBudgetExceeded& e) {
      v.status = ConfluenceStatus::Inconclusive;
      v.reason = e.what();
      return v;
    }
    ++v.pairs_checked;
    truncated = truncated || cert.truncated;
    if (!cert.resolved) {
      v.status = ConfluenceStatus::NotConfluent;
      v.witness = amb;
      v.remainder = std::move(cert.remainder);
      return v;
    }
  }
  if (has_separated_families(sys)) {
    v.status = ConfluenceStatus::Inconclusive;
    v.reason = "separated ambiguity families checked up to gap length " +
               std::to_string(options.separated_gap) + " only";
  } else if (truncated) {
    v.status = ConfluenceStatus::Inconclusive;
    v.reason = "ambiguities resolved modulo B_" +
               std::to_string(options.precision) + " only";
  }
  return v;
}

RewritingSystem interreduce(const RewritingSystem& sys,
                            std::size_t max_steps) {
  // Irreducibility depends on the leads alone, which stay fixed, so one
  // pass against the input system suffices.
  std::vector<Rule> rules = sys.rules();
  ReductionOptions ro;
  ro.max_steps = max_steps;
  for (auto& r : rules) r.lower = normal_form(sys, r.lower, ro).value;
  return sys.with_rules(std::move(rules));
}

std::pair<RewritingSystem, std::vector<DroppedRule>> drop_redundant(
    const RewritingSystem& sys, std::size_t max_steps) {
  const Theory& th = sys.theory();
  std::vector<Rule> rules = sys.rules();
  std::vector<DroppedRule> dropped;
  ReductionOptions ro;
  ro.max_steps = max_steps;
  for (std::size_t k = rules.size(); k-- > 0;) {
    std::vector<Rule> rest;
    std::optional<Monomial> reducer;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (i == k) continue;
      if (!reducer && !th.divisions(rules[k].lead, rules[i].lead).empty()) {
        reducer = rules[i].lead;
      }
      rest.push_back(rules[i]);
    }
    if (!reducer) continue;
    RewritingSystem smaller = sys.with_rules(rest);
    if (normal_form(smaller, rules[k].defining(sys.field()), ro)
            .value.is_zero()) {
      dropped.push_back({rules[k], *reducer});
      rules = std::move(rest);
    }
  }
  return {sys.with_rules(std::move(rules)), std::move(dropped)};
}

CompletionReport complete(const RewritingSystem& sys,
                          const CompletionLimits& limits) {
  if (sys.series_mode()) {
    throw PreconditionError("completion is not available in series mode");
  }
  const Theory& th = sys.theory();
  RewritingSystem current = sys;
  std::map<std::pair<int, std::size_t>, Ambiguity> queue;
  std::size_t seq = 0;
  auto enqueue = [&](Ambiguity a) {
    const int deg = th.degree(a.superposition);
    queue.emplace(std::make_pair(deg, seq++), std::move(a));
  };
  for (auto& a : critical_ambiguities(current)) enqueue(std::move(a));

  std::vector<AddedRule> added;
  CompletionStatus status = CompletionStatus::Complete;
  std::size_t processed = 0;
  bool over_degree = false;

  while (status == CompletionStatus::Complete) {
    while (!queue.empty() && status == CompletionStatus::Complete) {
      auto node = queue.extract(queue.begin());
      const Ambiguity& amb = node.mapped();
      if (node.key().first > limits.max_degree) {
        over_degree = true;
        continue;
      }
      if (second_criterion_filter(current, {amb}).empty()) continue;
      ++processed;
      auto cert = resolve(current, amb, limits.max_steps);
      if (cert.resolved) continue;

      Provenance source{current.rules()[amb.rule1].lead,
                        current.rules()[amb.rule2].lead, amb.superposition};
      std::vector<Element> parts;
      if (th.kind() == TheoryKind::Path) {
        parts = uniform_components(cert.remainder);
      } else {
        parts.push_back(cert.remainder);
      }
      for (const auto& part : parts) {
        if (current.rules().size() >= limits.max_rules) {
          status = CompletionStatus::RuleCapped;
          break;
        }
        Rule r = orient(part, current.order());
        std::vector<Rule> rules = current.rules();
        rules.push_back(r);
        current = interreduce(current.with_rules(std::move(rules)),
                              limits.max_steps);
        added.push_back({std::move(r), source});
        const std::size_t k = current.rules().size() - 1;
        for (std::size_t i = 0; i <= k; ++i) {
          for (auto& a : pair_ambiguities(current, i, k)) enqueue(std::move(a));
        }
      }
    }
    if (status != CompletionStatus::Complete) break;

    // Interreduction rewrites lower parts after their pairs were resolved,
    // so the final system is checked once more and failures requeued.
    over_degree = false;
    for (auto& amb : critical_ambiguities(current)) {
      if (resolve(current, amb, limits.max_steps).resolved) continue;
      if (th.degree(amb.superposition) > limits.max_degree) {
        over_degree = true;
      } else {
        enqueue(std::move(amb));
      }
    }
    if (queue.empty()) break;
  }
  if (status == CompletionStatus::Complete &&
      (over_degree || has_separated_families(current))) {
    status = CompletionStatus::DegreeCapped;
  }

  auto [pruned, dropped] = drop_redundant(current, limits.max_steps);
  RewritingSystem final_sys = interreduce(pruned, limits.max_steps);
  return {std::move(final_sys), std::move(added), std::move(dropped), status,
          processed};
}

std::optional<ConfluentSystem> ConfluentSystem::certify(
    const RewritingSystem& sys, const ConfluenceOptions& options) {
  if (check_confluence(sys, options).status != ConfluenceStatus::Confluent) {
    return std::nullopt;
  }
  return ConfluentSystem(sys);
}

bool ideal_member(const ConfluentSystem& sys, const Element& a) {
  return normal_form(sys.system(), a).value.is_zero();
}

bool ideal_member(const RewritingSystem& sys, const Element& a) {
  auto c = ConfluentSystem::certify(sys);
  if (!c) throw NotConfluentSystem("system is not known to be confluent");
  return ideal_member(*c, a);
}

}  // namespace diamond

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diamond/ambiguity.hpp"
#include "diamond/rewriting.hpp"

namespace diamond {

enum class ConfluenceStatus { Confluent, NotConfluent, Inconclusive };

const char* to_string(ConfluenceStatus s);

struct ConfluenceVerdict {
  ConfluenceStatus status = ConfluenceStatus::Confluent;
  std::optional<Ambiguity> witness;  // NotConfluent only
  Element remainder;                 // its nonzero normal form
  std::string reason;                // Inconclusive only
  std::size_t pairs_checked = 0;
};

struct ConfluenceOptions {
  std::size_t max_steps = kDefaultStepBudget;
  /// Series systems: ambiguities are resolved modulo B_precision.
  int precision = 16;
  /// Also check montages (they always resolve; used to test that claim).
  bool check_montages = false;
  bool second_criterion = false;
  int separated_gap = 2;
};

ConfluenceVerdict check_confluence(const RewritingSystem& sys,
                                   const ConfluenceOptions& options = {});

struct CompletionLimits {
  int max_degree = 12;
  std::size_t max_rules = 500;
  std::size_t max_steps = kDefaultStepBudget;
};

enum class CompletionStatus { Complete, DegreeCapped, RuleCapped };

const char* to_string(CompletionStatus s);

/// Where an added rule came from: the two leads and their superposition.
struct Provenance {
  Monomial lead1;
  Monomial lead2;
  Monomial superposition;
};

struct AddedRule {
  Rule rule;
  Provenance source;
};

struct DroppedRule {
  Rule rule;
  Monomial reducer;  // a remaining lead dividing rule.lead
};

struct CompletionReport {
  RewritingSystem system;
  std::vector<AddedRule> added;
  std::vector<DroppedRule> dropped;
  CompletionStatus status = CompletionStatus::Complete;
  std::size_t pairs_processed = 0;
};

/// Throws OrientationError when a remainder has incomparable maxima and
/// PreconditionError for series systems.
CompletionReport complete(const RewritingSystem& sys,
                          const CompletionLimits& limits = {});

/// Rewrites every rule's lower part to normal form under the other rules.
RewritingSystem interreduce(const RewritingSystem& sys,
                            std::size_t max_steps = kDefaultStepBudget);

/// Removes rules whose lead is divisible by a remaining lead and whose
/// defining element reduces to zero under the remaining rules. Later rules
/// are tried first.
std::pair<RewritingSystem, std::vector<DroppedRule>> drop_redundant(
    const RewritingSystem& sys, std::size_t max_steps = kDefaultStepBudget);

/// A system whose confluence has been verified.
class ConfluentSystem {
 public:
  /// nullopt unless check_confluence returns Confluent.
  static std::optional<ConfluentSystem> certify(
      const RewritingSystem& sys, const ConfluenceOptions& options = {});

  const RewritingSystem& system() const noexcept { return sys_; }

 private:
  explicit ConfluentSystem(RewritingSystem sys) : sys_(std::move(sys)) {}
  RewritingSystem sys_;
};

bool ideal_member(const ConfluentSystem& sys, const Element& a);
/// Throws NotConfluentSystem unless the system checks Confluent.
bool ideal_member(const RewritingSystem& sys, const Element& a);

}  // namespace diamond

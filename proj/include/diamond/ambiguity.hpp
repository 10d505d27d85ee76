#pragma once

#include <cstddef>
#include <vector>

#include "diamond/rewriting.hpp"

namespace diamond {

/// The triplet (t1, mu, t2): two simple reductions acting on one monomial.
struct Ambiguity {
  std::size_t rule1 = 0;
  Context context1;
  std::size_t rule2 = 0;
  Context context2;
  Monomial superposition;
  OverlapClass kind = OverlapClass::Overlap;
  /// Inclusions: 1 when rule1 is the inner reduction, 2 when rule2 is.
  int inner = 0;

  friend bool operator==(const Ambiguity&, const Ambiguity&) = default;
};

struct AmbiguityOptions {
  /// Report montages too (needed by the second criterion and by tests that
  /// compare against the unfiltered pair list).
  bool keep_montages = false;
  /// Mixed theory: gap words of separated families are listed up to this
  /// length.
  int separated_gap = 2;
};

/// Every V-critical ambiguity, canonically oriented and deduplicated.
std::vector<Ambiguity> critical_ambiguities(const RewritingSystem& sys,
                                            const AmbiguityOptions& options = {});

/// The ambiguities between rules i <= j only.
std::vector<Ambiguity> pair_ambiguities(const RewritingSystem& sys,
                                        std::size_t i, std::size_t j,
                                        const AmbiguityOptions& options = {});

/// Mixed theory: true when some pair of leads forms a separated family,
/// which no finite pair list covers.
bool has_separated_families(const RewritingSystem& sys);

/// The ambiguity with both sides exchanged.
Ambiguity flipped(const Ambiguity& amb);

/// context1(lower1) - context2(lower2)
Element s_polynomial(const RewritingSystem& sys, const Ambiguity& amb);

struct ResolutionCertificate {
  Element s_polynomial;
  std::vector<RewriteStep> trail;
  Element remainder;
  /// Series systems: some term was discarded below the precision cutoff.
  bool truncated = false;
  /// True iff the remainder is zero. False does not disprove relative
  /// resolvability: it only says this strategy did not reach zero.
  bool resolved = false;
};

/// Reduces the S-polynomial; series systems reduce modulo B_precision.
ResolutionCertificate resolve(const RewritingSystem& sys,
                              const Ambiguity& amb,
                              std::size_t max_steps = kDefaultStepBudget,
                              int precision = 16);

/// Drops (t1, mu, t2) when some third reduction t3 at mu makes both
/// (t1, t3) and (t3, t2) proper shadows or montages.
std::vector<Ambiguity> second_criterion_filter(
    const RewritingSystem& sys, const std::vector<Ambiguity>& pairs);

}  // namespace diamond

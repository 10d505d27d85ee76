#pragma once

// Test-side oracles and random corpora. The oracles avoid the rewriting
// engine: they use plain strings, brute-force enumeration and linear algebra.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diamond/completion.hpp"
#include "diamond/io.hpp"
#include "diamond/rewriting.hpp"

namespace support {

using diamond::Element;
using diamond::Monomial;
using diamond::RewritingSystem;

inline constexpr std::uint64_t kCorpusSeed = 20261019;

RewritingSystem parse(const std::string& text);
Element element(const RewritingSystem& sys, const std::string& text);

// ---------------------------------------------------------------------------
// Random corpora

/// Two-letter free monoid systems: 1..3 rules, lead degree 1..max_lead,
/// lower parts of at most two deglex-smaller words with coefficients in
/// {±1, ±2}.
std::vector<RewritingSystem> free_monoid_corpus(std::size_t count,
                                                std::uint64_t seed = kCorpusSeed,
                                                int max_lead = 4);

/// Commutative systems over x, y, z under deglex: 1..3 rules of lead degree
/// 1..3 with up to two smaller terms.
std::vector<RewritingSystem> commutative_corpus(std::size_t count,
                                                std::uint64_t seed = kCorpusSeed);

/// Random element: up to `terms` monomials of degree <= max_degree with
/// small nonzero coefficients.
Element random_element(const RewritingSystem& sys, std::mt19937_64& rng,
                       int max_degree, int terms);

// ---------------------------------------------------------------------------
// Oracles

/// Reduces with a uniformly random choice among all applicable simple
/// reductions at every step.
Element random_strategy_nf(const RewritingSystem& sys, const Element& a,
                           std::mt19937_64& rng, std::size_t max_steps = 100000);

/// Exact row echelon form over Q of sparse rows indexed by monomials.
class EchelonSpan {
 public:
  void add(Element row);
  bool contains(Element v) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  Element reduce(Element v) const;
  std::map<Monomial, Element> pivots_;  // pivot monomial -> row with coefficient 1 there
};

/// Span of all v(g) with deg v(g) <= max_degree, for generators g of an
/// ideal; contexts are all monomial multipliers (commutative) or all word
/// pairs (free monoid).
EchelonSpan truncated_ideal(const diamond::Theory& theory,
                            const std::vector<Element>& generators,
                            int max_degree);

/// Dimension of span(words of degree <= d) modulo the truncated ideal.
std::size_t truncated_quotient_dimension(const diamond::Theory& theory,
                                         const std::vector<Element>& gens,
                                         int d);

/// Words over {x, y} of length d that contain none of `forbidden` as a
/// factor, by plain string search.
std::size_t count_words_avoiding(const std::vector<std::string>& forbidden,
                                 int d, const std::string& alphabet = "xy");

/// Every irreducible form reachable from `start` by rewriting `lhs` -> `rhs`
/// at any position of a string.
std::set<std::string> string_rewrite_closure(const std::string& start,
                                             const std::string& lhs,
                                             const std::string& rhs,
                                             std::size_t max_states = 100000);

/// All words over the theory's letters, as contexts (left, right) pairs of
/// total length <= n.
std::vector<std::pair<diamond::Letters, diamond::Letters>> word_pairs(
    std::size_t letters, int n);

}  // namespace support

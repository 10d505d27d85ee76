#include <random>

#include "doctest.h"
#include "support.hpp"

#include "diamond/ambiguity.hpp"
#include "diamond/errors.hpp"

using namespace diamond;
using support::element;
using support::parse;

namespace {

std::vector<std::string> rule_texts(const RewritingSystem& sys) {
  std::vector<std::string> out;
  for (const auto& r : sys.rules()) out.push_back(format_rule(sys, r));
  std::sort(out.begin(), out.end());
  return out;
}

// Membership in the ideal certified by some truncation degree in [from, to].
bool in_truncated_ideal(const Theory& th, const std::vector<Element>& gens,
                        const Element& f, int from, int to) {
  for (int d = from; d <= to; ++d) {
    if (support::truncated_ideal(th, gens, d).contains(f)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("confluence verdict examples") {
  CHECK(check_confluence(parse("theory assoc; vars x y; order deglex x<y; rule y*x -> x*y"))
            .status == ConfluenceStatus::Confluent);
  CHECK(check_confluence(parse("theory assoc; vars x y; rule x^2 -> 1; rule y^2 -> 1"))
            .status == ConfluenceStatus::Confluent);
  auto buch = parse("theory comm; vars x y; order lex x>y; rule x^2 -> y; rule x*y -> 1");
  auto v = check_confluence(buch);
  CHECK(v.status == ConfluenceStatus::NotConfluent);
  REQUIRE(v.witness);
  CHECK(v.remainder == element(buch, "y^2 - x"));
}

TEST_CASE("NotConfluent witnesses replay to their remainder") {
  std::size_t seen = 0;
  for (const auto& sys : support::free_monoid_corpus(100, support::kCorpusSeed + 11)) {
    auto v = check_confluence(sys);
    if (v.status != ConfluenceStatus::NotConfluent) continue;
    ++seen;
    REQUIRE(v.witness);
    CHECK(!v.remainder.is_zero());
    CHECK(normal_form(sys, s_polynomial(sys, *v.witness)).value == v.remainder);
  }
  CHECK(seen > 10);
}

TEST_CASE("completion examples") {
  auto buch = parse("theory comm; vars x y; order lex x>y; rule x^2 -> y; rule x*y -> 1");
  auto rep = complete(buch);
  CHECK(rep.status == CompletionStatus::Complete);
  CHECK(rule_texts(rep.system) == std::vector<std::string>{"x -> y^2", "y^3 -> 1"});

  auto weyl = parse("theory assoc; vars x y; order deglex x<y; rule y*x -> x*y + 1");
  auto w = complete(weyl);
  CHECK(w.status == CompletionStatus::Complete);
  CHECK(w.added.empty());
  CHECK(w.system.rules() == weyl.rules());

  auto words = parse("theory assoc; vars x y; order deglex x<y; rule y*x -> x*y; rule y*y -> x");
  auto r = complete(words);
  CHECK(r.status == CompletionStatus::Complete);
  CHECK(check_confluence(r.system).status == ConfluenceStatus::Confluent);

  auto path = parse("theory path; vertices 1 2; arrow a: 1 -> 2; arrow b: 2 -> 1;"
                    "rule a*b*a -> a; rule b*a*b*a -> b*a");
  auto p = complete(path);
  CHECK(p.status == CompletionStatus::Complete);
  CHECK(check_confluence(p.system).status == ConfluenceStatus::Confluent);
}

TEST_CASE("completion caps") {
  auto sys = parse("theory assoc; vars x y; order deglex x<y; rule x*y*x -> y*y");
  CompletionLimits tight;
  tight.max_degree = 4;
  auto r = complete(sys, tight);
  CHECK(r.status != CompletionStatus::Complete);
  CompletionLimits few;
  few.max_rules = 1;
  CHECK(complete(sys, few).status == CompletionStatus::RuleCapped);
}

TEST_CASE("completion preserves the ideal and certifies confluence") {
  std::size_t complete_runs = 0, oracle_checks = 0;
  for (const auto& sys : support::commutative_corpus(30, support::kCorpusSeed + 12)) {
    auto rep = complete(sys);
    if (rep.status != CompletionStatus::Complete) continue;
    ++complete_runs;
    CHECK(check_confluence(rep.system).status == ConfluenceStatus::Confluent);
    for (const auto& r : sys.rules()) {
      CHECK(normal_form(rep.system, r.defining(sys.field())).value.is_zero());
    }
    for (const auto& a : rep.added) {
      CHECK(normal_form(rep.system, a.rule.defining(sys.field())).value.is_zero());
    }
    int d = 0;
    for (const auto& a : rep.added) d = std::max(d, sys.theory().degree(a.source.superposition));
    if (d == 0 || d > 8) continue;
    std::vector<Element> gens;
    for (const auto& r : sys.rules()) gens.push_back(r.defining(sys.field()));
    for (const auto& a : rep.added) {
      CHECK(in_truncated_ideal(sys.theory(), gens, a.rule.defining(sys.field()), d, 12));
      ++oracle_checks;
    }
  }
  CHECK(complete_runs > 10);
  CHECK(oracle_checks > 5);
}

TEST_CASE("completion of words preserves the ideal") {
  std::size_t checks = 0;
  for (const auto& sys : support::free_monoid_corpus(40, support::kCorpusSeed + 13, 3)) {
    CompletionLimits lim;
    lim.max_degree = 6;
    lim.max_rules = 30;
    auto rep = complete(sys, lim);
    int d = 0;
    for (const auto& a : rep.added) d = std::max(d, sys.theory().degree(a.source.superposition));
    if (rep.added.empty() || d > 6) continue;
    std::vector<Element> gens;
    for (const auto& r : sys.rules()) gens.push_back(r.defining(sys.field()));
    for (const auto& a : rep.added) {
      CHECK(in_truncated_ideal(sys.theory(), gens, a.rule.defining(sys.field()), d, 8));
      ++checks;
    }
  }
  CHECK(checks > 5);
}

TEST_CASE("completion is deterministic") {
  for (const auto& sys : support::commutative_corpus(10, support::kCorpusSeed + 14)) {
    auto a = complete(sys), b = complete(sys);
    CHECK(format_system(a.system) == format_system(b.system));
    CHECK(a.pairs_processed == b.pairs_processed);
    CHECK(a.added.size() == b.added.size());
  }
}

TEST_CASE("redundant rules are dropped without changing normal forms") {
  auto sys = parse("theory comm; vars x y; order lex x>y; rule x -> y^2; rule y^3 -> 1;"
                   "rule x^2 -> y");
  auto [pruned, dropped] = drop_redundant(sys);
  REQUIRE(dropped.size() == 1);
  CHECK(format_rule(sys, dropped[0].rule) == "x^2 -> y");
  CHECK(sys.theory().format(dropped[0].reducer) == "x");
  CHECK(rule_texts(pruned) == std::vector<std::string>{"x -> y^2", "y^3 -> 1"});
  std::mt19937_64 rng(support::kCorpusSeed + 15);
  for (int i = 0; i < 100; ++i) {
    auto a = support::random_element(sys, rng, 5, 4);
    CHECK(normal_form(sys, a).value == normal_form(pruned, a).value);
  }
}

TEST_CASE("ideal membership") {
  auto rep = complete(parse("theory comm; vars x y; order lex x>y; rule x^2 -> y; rule x*y -> 1"));
  auto cs = ConfluentSystem::certify(rep.system);
  REQUIRE(cs);
  CHECK(ideal_member(*cs, element(rep.system, "x^2 - y")));
  CHECK(!ideal_member(*cs, element(rep.system, "1")));
  auto raw = parse("theory comm; vars x y; order lex x>y; rule x^2 -> y; rule x*y -> 1");
  CHECK(!ConfluentSystem::certify(raw));
  CHECK_THROWS_AS(ideal_member(raw, element(raw, "x")), NotConfluentSystem);
}

TEST_CASE("confluence agrees with unique normal forms on small systems") {
  std::mt19937_64 rng(support::kCorpusSeed + 16);
  auto systems = support::free_monoid_corpus(60, support::kCorpusSeed + 16, 3);
  std::size_t agree = 0;
  for (const auto& sys : systems) {
    const bool conf = check_confluence(sys).status == ConfluenceStatus::Confluent;
    bool uniq = true;
    for (int d = 0; d <= 6 && uniq; ++d) {
      for (const auto& m : sys.theory().monomials_of_degree(d)) {
        const Element a = Element::monomial(sys.field(), m);
        const Element first = support::random_strategy_nf(sys, a, rng);
        for (int s = 1; s < 20 && uniq; ++s) {
          uniq = support::random_strategy_nf(sys, a, rng) == first;
        }
        if (!uniq) break;
      }
    }
    agree += conf == uniq ? 1 : 0;
  }
  CHECK(agree == systems.size());
}

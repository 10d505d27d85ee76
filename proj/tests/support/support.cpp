#include "support.hpp"

#include <algorithm>
#include <deque>

#include "diamond/errors.hpp"

namespace support {

using diamond::Field;
using diamond::Letters;
using diamond::MonomialOrder;
using diamond::OrderKind;
using diamond::Rule;
using diamond::Scalar;
using diamond::Theory;

RewritingSystem parse(const std::string& text) {
  return diamond::parse_system(text);
}

Element element(const RewritingSystem& sys, const std::string& text) {
  return diamond::parse_element(sys, text);
}

namespace {

long random_coefficient(std::mt19937_64& rng) {
  static constexpr long kChoices[] = {1, -1, 2, -2};
  return kChoices[std::uniform_int_distribution<int>(0, 3)(rng)];
}

Letters random_word(std::mt19937_64& rng, int length, int letters) {
  Letters w;
  std::uniform_int_distribution<int> pick(0, letters - 1);
  for (int i = 0; i < length; ++i) w.push_back(pick(rng));
  return w;
}

Letters random_exponents(std::mt19937_64& rng, int degree, int vars) {
  Letters e(static_cast<std::size_t>(vars), 0);
  std::uniform_int_distribution<int> pick(0, vars - 1);
  for (int i = 0; i < degree; ++i) ++e[static_cast<std::size_t>(pick(rng))];
  return e;
}

}  // namespace

std::vector<RewritingSystem> free_monoid_corpus(std::size_t count,
                                                std::uint64_t seed,
                                                int max_lead) {
  auto th = std::make_shared<const Theory>(Theory::free_monoid({"x", "y"}));
  const auto order = MonomialOrder::make(*th, OrderKind::Deglex);
  const Field q;
  std::mt19937_64 rng(seed);
  std::vector<RewritingSystem> out;
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Rule> rules;
    for (int r = 0; r < n; ++r) {
      const int len = std::uniform_int_distribution<int>(1, max_lead)(rng);
      Monomial lead = Monomial::word(random_word(rng, len, 2));
      Element lower(q);
      const int terms = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int t = 0; t < terms; ++t) {
        for (int attempt = 0; attempt < 20; ++attempt) {
          const int l = std::uniform_int_distribution<int>(0, len)(rng);
          Monomial m = Monomial::word(random_word(rng, l, 2));
          if (order.less(m, lead)) {
            lower.add_term(m, Scalar::from_int(q, random_coefficient(rng)));
            break;
          }
        }
      }
      rules.push_back({std::move(lead), std::move(lower)});
    }
    out.emplace_back(th, order, q, std::move(rules));
  }
  return out;
}

std::vector<RewritingSystem> commutative_corpus(std::size_t count,
                                                std::uint64_t seed) {
  auto th = std::make_shared<const Theory>(
      Theory::commutative({"x", "y", "z"}));
  const auto order = MonomialOrder::make(*th, OrderKind::Deglex);
  const Field q;
  std::mt19937_64 rng(seed);
  std::vector<RewritingSystem> out;
  while (out.size() < count) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<Rule> rules;
    for (int r = 0; r < n; ++r) {
      const int deg = std::uniform_int_distribution<int>(1, 3)(rng);
      Monomial lead = Monomial::power_product(random_exponents(rng, deg, 3));
      Element lower(q);
      const int terms = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int t = 0; t < terms; ++t) {
        for (int attempt = 0; attempt < 20; ++attempt) {
          const int d = std::uniform_int_distribution<int>(0, deg)(rng);
          Monomial m = Monomial::power_product(random_exponents(rng, d, 3));
          if (order.less(m, lead)) {
            lower.add_term(m, Scalar::from_int(q, random_coefficient(rng)));
            break;
          }
        }
      }
      rules.push_back({std::move(lead), std::move(lower)});
    }
    out.emplace_back(th, order, q, std::move(rules));
  }
  return out;
}

Element random_element(const RewritingSystem& sys, std::mt19937_64& rng,
                       int max_degree, int terms) {
  const Theory& th = sys.theory();
  Element a(sys.field());
  const int k = std::uniform_int_distribution<int>(1, terms)(rng);
  for (int i = 0; i < k; ++i) {
    const int d = std::uniform_int_distribution<int>(0, max_degree)(rng);
    auto ms = th.monomials_of_degree(d);
    if (ms.empty()) continue;
    const auto& m =
        ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    long c = std::uniform_int_distribution<long>(-3, 3)(rng);
    if (c == 0) c = 1;
    a.add_term(m, Scalar::from_int(sys.field(), c));
  }
  return a;
}

Element random_strategy_nf(const RewritingSystem& sys, const Element& a,
                           std::mt19937_64& rng, std::size_t max_steps) {
  Element cur = a;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::vector<diamond::SimpleReduction> options;
    for (const auto& [m, c] : cur.terms()) {
      for (auto& t : diamond::simple_reductions(sys, m)) {
        options.push_back(std::move(t));
      }
    }
    if (options.empty()) return cur;
    const auto& t = options[std::uniform_int_distribution<std::size_t>(
        0, options.size() - 1)(rng)];
    cur = diamond::apply_reduction(sys, t, cur);
  }
  throw diamond::StepBudgetExceeded("random strategy did not terminate");
}

Element EchelonSpan::reduce(Element v) const {
  std::vector<std::pair<Monomial, Scalar>> hits;
  for (const auto& [m, c] : v.terms()) {
    if (pivots_.count(m)) hits.emplace_back(m, c);
  }
  for (const auto& [m, c] : hits) {
    Element row = pivots_.at(m);
    row *= c;
    v -= row;
  }
  return v;
}

void EchelonSpan::add(Element row) {
  row = reduce(std::move(row));
  if (row.is_zero()) return;
  const auto pivot = std::prev(row.terms().end())->first;
  row *= row.coefficient(pivot).inverse();
  for (auto& [p, r] : pivots_) {
    Scalar c = r.coefficient(pivot);
    if (c.is_zero()) continue;
    Element t = row;
    t *= c;
    r -= t;
  }
  pivots_.emplace(pivot, std::move(row));
}

bool EchelonSpan::contains(Element v) const {
  return reduce(std::move(v)).is_zero();
}

std::vector<std::pair<Letters, Letters>> word_pairs(std::size_t letters,
                                                    int n) {
  std::vector<Letters> words{Letters{}};
  std::vector<Letters> frontier{Letters{}};
  for (int len = 1; len <= n; ++len) {
    std::vector<Letters> next;
    for (const auto& w : frontier) {
      for (std::size_t l = 0; l < letters; ++l) {
        Letters x = w;
        x.push_back(static_cast<std::int32_t>(l));
        next.push_back(x);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::pair<Letters, Letters>> out;
  for (const auto& u : words) {
    for (const auto& v : words) {
      if (static_cast<int>(u.size() + v.size()) <= n) out.emplace_back(u, v);
    }
  }
  return out;
}

EchelonSpan truncated_ideal(const Theory& theory,
                            const std::vector<Element>& generators,
                            int max_degree) {
  EchelonSpan span;
  for (const auto& g : generators) {
    int deg = 0;
    for (const auto& [m, c] : g.terms()) deg = std::max(deg, theory.degree(m));
    const int room = max_degree - deg;
    if (room < 0) continue;
    if (theory.kind() == diamond::TheoryKind::Commutative) {
      for (int d = 0; d <= room; ++d) {
        for (const auto& mult : theory.monomials_of_degree(d)) {
          span.add(diamond::multiply(theory, Element::monomial(g.field(), mult), g));
        }
      }
    } else {
      for (const auto& [u, v] : word_pairs(theory.generator_count(), room)) {
        Element row(g.field());
        for (const auto& [m, c] : g.terms()) {
          Letters w = u;
          w.insert(w.end(), m.letters().begin(), m.letters().end());
          w.insert(w.end(), v.begin(), v.end());
          row.add_term(Monomial::word(std::move(w)), c);
        }
        span.add(std::move(row));
      }
    }
  }
  return span;
}

std::size_t truncated_quotient_dimension(const Theory& theory,
                                         const std::vector<Element>& gens,
                                         int d) {
  std::size_t words = 0;
  for (int k = 0; k <= d; ++k) words += theory.monomials_of_degree(k).size();
  return words - truncated_ideal(theory, gens, d).rank();
}

std::size_t count_words_avoiding(const std::vector<std::string>& forbidden,
                                 int d, const std::string& alphabet) {
  std::vector<std::string> words{""};
  for (int i = 0; i < d; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words) {
      for (char c : alphabet) next.push_back(w + c);
    }
    words = std::move(next);
  }
  return static_cast<std::size_t>(
      std::count_if(words.begin(), words.end(), [&](const std::string& w) {
        return std::none_of(forbidden.begin(), forbidden.end(),
                            [&](const std::string& f) {
                              return w.find(f) != std::string::npos;
                            });
      }));
}

std::set<std::string> string_rewrite_closure(const std::string& start,
                                             const std::string& lhs,
                                             const std::string& rhs,
                                             std::size_t max_states) {
  std::set<std::string> seen{start}, terminal;
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string s = queue.front();
    queue.pop_front();
    bool any = false;
    for (auto p = s.find(lhs); p != std::string::npos; p = s.find(lhs, p + 1)) {
      any = true;
      std::string t = s.substr(0, p) + rhs + s.substr(p + lhs.size());
      if (seen.insert(t).second) {
        if (seen.size() > max_states) return terminal;
        queue.push_back(std::move(t));
      }
    }
    if (!any) terminal.insert(s);
  }
  return terminal;
}

}  // namespace support

#include <random>

#include "doctest.h"
#include "support.hpp"

#include "diamond/errors.hpp"
#include "diamond/theory.hpp"

using namespace diamond;

namespace {

Monomial w(const std::string& s) {
  Letters l;
  for (char c : s) l.push_back(c - 'x');
  return Monomial::word(l);
}

std::vector<Monomial> words_upto(const Theory& th, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    for (auto& m : th.monomials_of_degree(k)) out.push_back(m);
  }
  return out;
}

Letters as_letters(std::span<const std::int32_t> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("word divisions list every occurrence") {
  auto th = Theory::free_monoid({"x", "y"});
  auto ds = th.divisions(w("xyx"), w("x"));
  REQUIRE(ds.size() == 2);
  CHECK(ds[0] == Context::word({}, {1, 0}));
  CHECK(ds[1] == Context::word({0, 1}, {}));
  CHECK(th.format(ds[0]) == "_*y*x");
}

TEST_CASE("divisions agree with brute-force context search") {
  auto words = Theory::free_monoid({"x", "y"});
  auto all = words_upto(words, 5);
  auto pairs = support::word_pairs(2, 5);
  std::size_t bad = 0;
  for (const auto& mu : all) {
    for (const auto& nu : words_upto(words, 3)) {
      std::set<Context> brute;
      for (const auto& [u, v] : pairs) {
        auto c = Context::word(u, v);
        if (words.apply(c, nu) == mu) brute.insert(c);
      }
      auto got = words.divisions(mu, nu);
      if (std::set<Context>(got.begin(), got.end()) != brute ||
          got.size() != brute.size()) {
        MESSAGE(words.format(mu) << " / " << words.format(nu) << ": " << got.size()
                                 << " vs " << brute.size());
        ++bad;
      }
      if (words.divides(nu, mu) != !brute.empty()) {
        MESSAGE("divides " << words.format(nu) << " | " << words.format(mu));
        ++bad;
      }
    }
  }
  CHECK(bad == 0);

  auto comm = Theory::commutative({"x", "y", "z"});
  auto cms = words_upto(comm, 5);
  for (const auto& mu : cms) {
    for (const auto& nu : words_upto(comm, 3)) {
      std::size_t brute = 0;
      for (const auto& m : cms) {
        if (comm.multiply(m, nu) == mu) ++brute;
      }
      if (comm.divisions(mu, nu).size() != brute) {
        MESSAGE(comm.format(mu) << " / " << comm.format(nu));
        ++bad;
      }
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("commutative overlaps and lcm") {
  auto th = Theory::commutative({"x", "y"});
  auto x = th.generator(0), y = th.generator(1);
  auto xx = *th.multiply(x, x), xy = *th.multiply(x, y);
  auto ov = th.overlaps(xx, xy);
  REQUIRE(ov.size() == 1);
  CHECK(th.format(ov[0].superposition) == "x^2*y");
  auto l = th.lcm_superposition(xx, xy);
  CHECK(th.format(l.lcm) == "x^2*y");
  CHECK(th.apply(l.first, xx) == l.lcm);
  CHECK(th.apply(l.second, xy) == l.lcm);
  CHECK(l.first == Context::multiplier({0, 1}));
  CHECK(l.second == Context::multiplier({1, 0}));
  CHECK(th.overlaps(xx, *th.multiply(y, y)).empty());
  OverlapOptions keep;
  keep.keep_montages = true;
  auto m = th.overlaps(xx, *th.multiply(y, y), keep);
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == OverlapClass::Montage);
}

TEST_CASE("word overlaps in both orientations") {
  auto th = Theory::free_monoid({"x", "y"});
  auto ov = th.overlaps(w("xy"), w("yx"));
  std::set<std::string> sup;
  for (const auto& d : ov) {
    sup.insert(th.format(d.superposition));
    CHECK(d.kind == OverlapClass::Overlap);
  }
  CHECK(sup == std::set<std::string>{"x*y*x", "y*x*y"});
  // Equal leads: only the trivial inclusion, which the pair layer drops for
  // a rule against itself.
  auto same = th.overlaps(w("yx"), w("yx"));
  REQUIRE(same.size() == 1);
  CHECK(same[0].first.is_identity());
  CHECK(same[0].second.is_identity());
  std::set<std::string> self;
  for (const auto& d : th.overlaps(w("xx"), w("xx"))) {
    if (d.kind == OverlapClass::Overlap) self.insert(th.format(d.superposition));
  }
  CHECK(self == std::set<std::string>{"x^3"});
  auto inc = th.overlaps(w("xyx"), w("y"));
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].kind == OverlapClass::Inclusion);
  CHECK(inc[0].inner == 2);
}

TEST_CASE("word overlaps are complete up to shadows and montages") {
  auto th = Theory::free_monoid({"x", "y"});
  std::mt19937_64 rng(support::kCorpusSeed);
  auto pairs = support::word_pairs(2, 8);
  std::size_t unexplained = 0, checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto pick = [&] {
      auto ms = th.monomials_of_degree(
          std::uniform_int_distribution<int>(1, 4)(rng));
      return ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)];
    };
    const Monomial m1 = pick(), m2 = pick();
    const auto ov = th.overlaps(m1, m2);
    for (int d = 1; d <= 8; ++d) {
      for (const auto& mu : th.monomials_of_degree(d)) {
        for (const auto& c1 : th.divisions(mu, m1)) {
          for (const auto& c2 : th.divisions(mu, m2)) {
            if (m1 == m2 && c1 == c2) continue;
            ++checked;
            const std::size_t s1 = c1.left().size(), e1 = s1 + m1.letters().size();
            const std::size_t s2 = c2.left().size(), e2 = s2 + m2.letters().size();
            if (e1 <= s2 || e2 <= s1) continue;  // montage
            bool found = false;
            for (const auto& o : ov) {
              for (const auto& c : th.divisions(mu, o.superposition)) {
                if (th.compose(c, o.first) == c1 && th.compose(c, o.second) == c2) {
                  found = true;
                }
              }
            }
            if (!found) ++unexplained;
          }
        }
      }
    }
  }
  CHECK(checked > 1000);
  CHECK(unexplained == 0);
}

TEST_CASE("context composition is a monoid action") {
  std::mt19937_64 rng(support::kCorpusSeed);
  auto words = Theory::free_monoid({"x", "y"});
  auto comm = Theory::commutative({"x", "y"});
  auto mixed = Theory::mixed({"t"}, {"a", "b"});
  auto magma = Theory::free_magma({"x", "y"});
  std::size_t bad = 0, tried = 0;
  for (const Theory* th : {&words, &comm, &mixed, &magma}) {
    auto ms = words_upto(*th, 3);
    auto big = words_upto(*th, th->kind() == TheoryKind::FreeMagma ? 4 : 5);
    std::uniform_int_distribution<std::size_t> pm(0, ms.size() - 1);
    std::uniform_int_distribution<std::size_t> pb(0, big.size() - 1);
    for (int i = 0; i < 300; ++i) {
      const Monomial mu = ms[pm(rng)];
      const Monomial host1 = big[pb(rng)], host2 = big[pb(rng)];
      auto d1 = th->divisions(host1, ms[pm(rng)]);
      auto d2 = th->divisions(host2, ms[pm(rng)]);
      if (d1.empty() || d2.empty()) continue;
      const Context v1 = d1.front(), v2 = d2.back();
      auto inner = th->apply(v1, mu);
      auto comp = th->compose(v2, v1);
      if (!inner || !comp) continue;
      ++tried;
      if (th->apply(v2, *inner) != th->apply(*comp, mu)) ++bad;
      if (th->apply(th->identity(mu), mu) != mu) ++bad;
    }
  }
  CHECK(tried > 100);
  CHECK(bad == 0);
}

TEST_CASE("path contexts respect endpoints") {
  auto th = Theory::path({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}, {"c", 1, 1}});
  auto a = th.generator(0), b = th.generator(1), c = th.generator(2);
  CHECK(!th.multiply(a, a));
  CHECK(!th.multiply(b, c));
  auto ab = *th.multiply(a, b);
  auto aba = *th.multiply(ab, a);
  CHECK(th.uniform_equivalent(th.vertex(0), ab));
  CHECK(th.uniform_equivalent(aba, a));
  CHECK(!th.uniform_equivalent(aba, ab));
  CHECK(th.format(th.vertex(0)) == "e1");

  auto all = words_upto(th, 5);
  std::size_t bad = 0;
  for (const auto& mu : all) {
    for (const auto& nu : words_upto(th, 2)) {
      for (const auto& v : th.divisions(mu, nu)) {
        for (const auto& other : words_upto(th, 2)) {
          auto r = th.apply(v, other);
          if (!r) continue;
          auto arrows = r->letters();
          for (std::size_t i = 1; i < arrows.size(); ++i) {
            if (th.arrows()[arrows[i - 1]].target != th.arrows()[arrows[i]].source) {
              ++bad;
            }
          }
          if (!arrows.empty() && (th.arrows()[arrows.front()].source != r->source() ||
                                  th.arrows()[arrows.back()].target != r->target())) {
            ++bad;
          }
        }
      }
    }
  }
  CHECK(bad == 0);
  auto ov = th.overlaps(ab, *th.multiply(b, a));
  std::set<std::string> sup;
  for (const auto& d : ov) sup.insert(th.format(d.superposition));
  CHECK(sup == std::set<std::string>{"a*b*a", "b*a*b"});
}

TEST_CASE("magma ambiguities are subtree inclusions") {
  auto th = Theory::free_magma({"x"});
  auto x = th.generator(0);
  auto xx = *th.multiply(x, x);
  auto big = *th.multiply(xx, xx);
  CHECK(th.format(big) == "((x*x)*(x*x))");
  CHECK(th.degree(big) == 4);
  CHECK(th.divisions(big, xx).size() == 2);
  CHECK(th.divisions(*th.multiply(x, xx), xx).size() == 1);
  for (const auto& d : th.overlaps(xx, xx)) {
    CHECK(d.kind == OverlapClass::Inclusion);
    CHECK(d.superposition == xx);
  }
  auto inc = th.overlaps(big, xx);
  CHECK(inc.size() == 2);
  for (const auto& d : inc) CHECK(d.kind == OverlapClass::Inclusion);
  CHECK(th.monomials_of_degree(3).size() == 2);
  CHECK(th.monomials_of_degree(4).size() == 5);
  CHECK(!th.one());
}

TEST_CASE("mixed monomials commute the central part") {
  auto th = Theory::mixed({"t"}, {"a", "b"});
  auto t = th.generator(0), a = th.generator(1), b = th.generator(2);
  auto ta = *th.multiply(t, a), at = *th.multiply(a, t);
  CHECK(ta == at);
  CHECK(th.format(*th.multiply(ta, b)) == "t*a*b");
  CHECK(th.degree(*th.multiply(ta, b)) == 3);
  CHECK(th.divides(t, *th.multiply(a, *th.multiply(t, b))));
}

TEST_CASE("theory mismatches are rejected") {
  auto words = Theory::free_monoid({"x", "y"});
  auto comm = Theory::commutative({"x", "y"});
  CHECK_THROWS_AS(words.degree(comm.generator(0)), TheoryMismatch);
  CHECK_THROWS_AS(words.validate(Monomial::word({5})), TheoryMismatch);
  CHECK_THROWS(Theory::free_monoid({"x", "x"}));
}

#include <random>

#include "doctest.h"
#include "support.hpp"

#include "diamond/errors.hpp"
#include "diamond/order.hpp"

using namespace diamond;

namespace {

std::vector<Monomial> upto(const Theory& th, int d) {
  std::vector<Monomial> out;
  for (int k = 0; k <= d; ++k) {
    for (auto& m : th.monomials_of_degree(k)) out.push_back(m);
  }
  return out;
}

Scalar q(long n, long d = 1) { return Scalar::from_rational(Field{}, n, d); }

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
  CHECK((q(1, 2) + q(1, 3)) == q(5, 6));
  CHECK((q(2, 3) * q(3, 2)).is_one());
  CHECK(q(-3, 4).is_negative());
  CHECK(q(-3, 4).inverse() == q(-4, 3));
  CHECK(q(6, 4).to_string() == "3/2");
  CHECK_THROWS_AS(q(0).inverse(), PreconditionError);

  const Field f7 = Field::prime(7);
  const Scalar three = Scalar::from_int(f7, 3);
  CHECK((three * three.inverse()).is_one());
  CHECK(Scalar::from_int(f7, -1) == Scalar::from_int(f7, 6));
  CHECK((Scalar::from_int(f7, 4) + three).is_zero());
  CHECK(Scalar::from_rational(f7, 1, 2) == Scalar::from_int(f7, 4));
  CHECK_THROWS(Field::prime(8));
  CHECK_THROWS(three + q(1));
}

TEST_CASE("element terms merge and cancel") {
  auto sys = support::parse("theory comm; vars x y; rule x -> y");
  auto a = support::element(sys, "x^2 - y");
  auto b = support::element(sys, "y - 1");
  CHECK(a + b == support::element(sys, "x^2 - 1"));
  CHECK((a - a).is_zero());
  CHECK((a - a).terms().empty());
  CHECK((q(0) * a).is_zero());
}

TEST_CASE("coefficient extraction is linear") {
  auto sys = support::parse("theory assoc; vars x y; rule x*y -> y");
  std::mt19937_64 rng(support::kCorpusSeed);
  for (int i = 0; i < 200; ++i) {
    auto a = support::random_element(sys, rng, 3, 4);
    auto b = support::random_element(sys, rng, 3, 4);
    const Scalar s = q(static_cast<long>(i % 7) - 3, 2);
    for (const auto& m : sys.theory().monomials_of_degree(i % 4)) {
      CHECK(coefficient_of(a + b, m) ==
            coefficient_of(a, m) + coefficient_of(b, m));
      CHECK(coefficient_of(s * a, m) == s * coefficient_of(a, m));
    }
    const Element sum = a + s * b;
    for (const auto& [m, c] : sum.terms()) CHECK(!c.is_zero());
  }
}

TEST_CASE("orders are antisymmetric and transitive on degree <= 5") {
  auto comm = Theory::commutative({"x", "y"});
  auto words = Theory::free_monoid({"x", "y"});
  struct Case {
    const Theory* th;
    OrderKind kind;
    std::vector<mpq_class> w;
  };
  const std::vector<Case> cases{
      {&comm, OrderKind::Deglex, {}},
      {&comm, OrderKind::Lex, {}},
      {&comm, OrderKind::WeightedDeglex, {2, 1}},
      {&comm, OrderKind::SeriesDeglex, {-1, mpq_class(1, 2)}},
      {&comm, OrderKind::Graded, {1, 1}},
      {&words, OrderKind::Deglex, {}},
      {&words, OrderKind::WeightedDeglex, {1, 3}},
      {&words, OrderKind::Graded, {1, 2}},
  };
  for (const auto& c : cases) {
    auto order = MonomialOrder::make(*c.th, c.kind, {}, c.w);
    auto ms = upto(*c.th, c.th->kind() == TheoryKind::Commutative ? 5 : 4);
    std::size_t bad = 0;
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        const Relation ab = order.compare(a, b), ba = order.compare(b, a);
        if ((ab == Relation::Less) != (ba == Relation::Greater)) ++bad;
        if ((ab == Relation::Equal) != (a == b)) ++bad;
        if (ab == Relation::Less && !(order.total(a, b) < 0)) ++bad;
      }
    }
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        if (!order.less(a, b)) continue;
        for (const auto& cc : ms) {
          if (order.less(b, cc) && !order.less(a, cc)) ++bad;
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("order examples") {
  auto comm = Theory::commutative({"x", "y"});
  auto x = comm.generator(0), y = comm.generator(1);
  auto xx = *comm.multiply(x, x), xy = *comm.multiply(x, y);
  auto lex = MonomialOrder::make(comm, OrderKind::Lex);
  CHECK(lex.compare(x, *comm.multiply(y, *comm.multiply(y, y))) ==
        Relation::Greater);
  auto deglex = MonomialOrder::make(comm, OrderKind::Deglex);
  CHECK(deglex.compare(xx, xy) == Relation::Greater);
  CHECK(deglex.compare(x, xy) == Relation::Less);

  auto single = Theory::commutative({"x"});
  auto s = single.generator(0);
  auto s2 = *single.multiply(s, s), s3 = *single.multiply(s2, s);
  auto series = MonomialOrder::make(single, OrderKind::SeriesDeglex, {}, {-1});
  CHECK(series.compare(s2, s3) == Relation::Greater);
  CHECK(series.is_well_founded() == false);

  auto graded = MonomialOrder::make(comm, OrderKind::Graded);
  CHECK(graded.compare(x, y) == Relation::Incomparable);
  CHECK(!graded.is_total());

  CHECK_THROWS(MonomialOrder::make(Theory::free_monoid({"x"}), OrderKind::Lex));
  CHECK_THROWS(MonomialOrder::make(comm, OrderKind::WeightedDeglex, {}, {1, -1}));
  CHECK_THROWS(MonomialOrder::make(comm, OrderKind::Deglex, {0, 0}));
}

TEST_CASE("descending chains from degree <= 8 terminate") {
  // Deglex and weighted deglex: everything below mu within a larger window
  // stays within mu's degree or weight, so the down-set is finite.
  auto th = Theory::commutative({"x", "y"});
  auto small = upto(th, 8), window = upto(th, 12);
  auto deglex = MonomialOrder::make(th, OrderKind::Deglex);
  auto weighted =
      MonomialOrder::make(th, OrderKind::WeightedDeglex, {}, {3, 1});
  std::size_t escapes = 0;
  for (const auto& mu : small) {
    for (const auto& nu : window) {
      if (deglex.less(nu, mu) && th.degree(nu) > th.degree(mu)) ++escapes;
      if (weighted.less(nu, mu) && weighted.weight(nu) > weighted.weight(mu)) {
        ++escapes;
      }
    }
  }
  CHECK(escapes == 0);

  // Lex: descent lowers the x exponent or keeps it and lowers y, which is
  // the lexicographic well-order on N^2.
  auto lex = MonomialOrder::make(th, OrderKind::Lex);
  std::size_t bad = 0;
  for (const auto& mu : small) {
    for (const auto& nu : window) {
      if (!lex.less(nu, mu)) continue;
      const auto a = nu.exponents(), b = mu.exponents();
      if (!(a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]))) ++bad;
    }
  }
  CHECK(bad == 0);

  // Exhaustive descent from every degree-8 deglex monomial.
  std::map<Monomial, std::size_t> longest;
  auto ms = small;
  std::sort(ms.begin(), ms.end(),
            [&](const Monomial& a, const Monomial& b) { return deglex.less(a, b); });
  for (const auto& m : ms) {
    std::size_t best = 0;
    for (const auto& [n, len] : longest) {
      if (deglex.less(n, m)) best = std::max(best, len + 1);
    }
    longest[m] = best;
  }
  for (const auto& [m, len] : longest) CHECK(len < ms.size());
}

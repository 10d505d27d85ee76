#include "diamond/series.hpp"

#include <algorithm>

#include "diamond/rewriting.hpp"

namespace diamond {

mpq_class WeightData::exponent(const Monomial& m) const {
  // Exponent vectors come first in the generator numbering.
  auto e = m.exponents();
  mpq_class s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += weights.at(i) * e[i];
  for (auto l : m.letters()) {
    if (l >= 0) s += weights.at(e.size() + static_cast<std::size_t>(l));
  }
  return s;
}

std::optional<mpq_class> WeightData::norm(const Element& a) const {
  std::optional<mpq_class> best;
  for (const auto& [m, c] : a.terms()) {
    mpq_class x = exponent(m);
    if (!best || x > *best) best = x;
  }
  return best;
}

bool WeightData::below_cutoff(const Monomial& m, int n) const {
  return exponent(m) < 1 - n;
}

EquicontinuityVerdict check_equicontinuity(const RewritingSystem& sys,
                                           const WeightData& w) {
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    auto n = w.norm(rules[i].lower);
    const mpq_class u = w.exponent(rules[i].lead);
    if (n && *n > u) {
      return {false, i,
              "norm 2^(" + n->get_str() + ") of the lower part exceeds 2^(" +
                  u.get_str() + ") of " + sys.theory().format(rules[i].lead)};
    }
  }
  return {};
}

TdccVerdict check_tdcc(const MonomialOrder& order, const WeightData& w) {
  if (order.kind() == OrderKind::SeriesDeglex) {
    if (order.weights() == w.weights) {
      return {true, "series order ranks by these weights first"};
    }
    return {false, "series order ranks by weights other than the norm's"};
  }
  const bool nonnegative =
      std::all_of(w.weights.begin(), w.weights.end(),
                  [](const mpq_class& x) { return x >= 0; });
  if (!nonnegative) {
    return {false,
            "negative weights under an order that does not rank by norm"};
  }
  if (!order.is_well_founded()) return {false, "order is not well-founded"};
  return {true, "well-founded order"};
}

}  // namespace diamond

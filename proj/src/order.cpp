#include "diamond/order.hpp"

#include <algorithm>
#include <numeric>

#include "diamond/errors.hpp"

namespace diamond {

const char* to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::Deglex: return "deglex";
    case OrderKind::WeightedDeglex: return "weighted";
    case OrderKind::Lex: return "lex";
    case OrderKind::SeriesDeglex: return "series";
    case OrderKind::Graded: return "graded";
  }
  return "?";
}

const char* to_string(Relation rel) {
  switch (rel) {
    case Relation::Less: return "LT";
    case Relation::Greater: return "GT";
    case Relation::Equal: return "EQ";
    case Relation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

MonomialOrder MonomialOrder::make(const Theory& theory, OrderKind kind,
                                  std::vector<int> rank,
                                  std::vector<mpq_class> weights) {
  const std::size_t n = theory.generator_count();
  MonomialOrder o;
  o.kind_ = kind;
  o.theory_ = theory.kind();
  o.central_ = theory.central_alphabet().size();

  if (kind == OrderKind::Lex && theory.kind() != TheoryKind::Commutative) {
    throw SystemError(
        "lex is only a monomial order on power products; use deglex");
  }

  if (rank.empty()) {
    rank.resize(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<int>(n - 1 - i);
  }
  if (rank.size() != n) throw SystemError("generator ranking has wrong size");
  std::vector<int> sorted = rank;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw SystemError("generator ranking is not a permutation");
    }
  }
  o.rank_ = std::move(rank);

  switch (kind) {
    case OrderKind::Deglex:
    case OrderKind::Lex:
      if (!weights.empty()) {
        throw SystemError(std::string(to_string(kind)) +
                          " order takes no weights");
      }
      weights.assign(n, mpq_class(1));
      break;
    case OrderKind::Graded:
      if (weights.empty()) weights.assign(n, mpq_class(1));
      [[fallthrough]];
    case OrderKind::WeightedDeglex:
      if (weights.size() != n) throw SystemError("weights have wrong size");
      for (const auto& w : weights) {
        if (w <= 0) {
          throw SystemError(std::string(to_string(kind)) +
                            " order needs positive weights");
        }
      }
      break;
    case OrderKind::SeriesDeglex:
      if (weights.size() != n) {
        throw SystemError("series order needs one weight per generator");
      }
      break;
  }
  o.weights_ = std::move(weights);

  mpz_class den = 1;
  for (const auto& w : o.weights_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den_mpz_t());
  }
  for (const auto& w : o.weights_) {
    mpz_class s = w.get_num() * (den / w.get_den());
    if (!s.fits_slong_p()) throw SystemError("weight out of range");
    o.scaled_.push_back(s.get_si());
  }
  return o;
}

bool MonomialOrder::is_well_founded() const {
  if (kind_ != OrderKind::SeriesDeglex) return true;
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const mpq_class& w) { return w >= 0; });
}

int MonomialOrder::letter_rank(std::int32_t word_letter) const {
  return rank_[central_ + static_cast<std::size_t>(word_letter)];
}

std::int64_t MonomialOrder::scaled_weight(const Monomial& m) const {
  std::int64_t w = 0;
  auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) w += scaled_[i] * e[i];
  for (auto l : m.letters()) {
    if (l >= 0) w += scaled_[central_ + static_cast<std::size_t>(l)];
  }
  return w;
}

mpq_class MonomialOrder::weight(const Monomial& m) const {
  mpq_class w = 0;
  auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) w += weights_[i] * e[i];
  for (auto l : m.letters()) {
    if (l >= 0) w += weights_[central_ + static_cast<std::size_t>(l)];
  }
  return w;
}

int MonomialOrder::degree(const Monomial& m) const {
  auto e = m.exponents();
  int d = std::accumulate(e.begin(), e.end(), 0);
  for (auto l : m.letters()) d += l >= 0 ? 1 : 0;
  return d;
}

std::strong_ordering MonomialOrder::tie_break(const Monomial& a,
                                              const Monomial& b) const {
  // Exponent vectors: the highest ranked generator decides first.
  auto ea = a.exponents();
  auto eb = b.exponents();
  if (!ea.empty()) {
    std::vector<std::size_t> by_rank(ea.size());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](std::size_t i, std::size_t j) { return rank_[i] > rank_[j]; });
    for (auto i : by_rank) {
      if (auto c = ea[i] <=> eb[i]; c != 0) return c;
    }
  }
  auto la = a.letters();
  auto lb = b.letters();
  const std::size_t n = std::min(la.size(), lb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = la[i] >= 0 ? letter_rank(la[i]) : -1;
    const int rb = lb[i] >= 0 ? letter_rank(lb[i]) : -1;
    if (auto c = ra <=> rb; c != 0) return c;
  }
  if (auto c = la.size() <=> lb.size(); c != 0) return c;
  if (auto c = a.source() <=> b.source(); c != 0) return c;
  return a.target() <=> b.target();
}

std::strong_ordering MonomialOrder::total(const Monomial& a,
                                          const Monomial& b) const {
  if (a.kind() != theory_ || b.kind() != theory_) {
    throw TheoryMismatch("order compared monomials of another theory");
  }
  if (kind_ == OrderKind::Lex) return tie_break(a, b);
  if (auto c = scaled_weight(a) <=> scaled_weight(b); c != 0) return c;
  if (auto c = degree(a) <=> degree(b); c != 0) return c;
  return tie_break(a, b);
}

Relation MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::Graded) {
    if (a.kind() != theory_ || b.kind() != theory_) {
      throw TheoryMismatch("order compared monomials of another theory");
    }
    if (a == b) return Relation::Equal;
    auto c = scaled_weight(a) <=> scaled_weight(b);
    if (c == 0) return Relation::Incomparable;
    return c < 0 ? Relation::Less : Relation::Greater;
  }
  auto c = total(a, b);
  if (c == 0) return Relation::Equal;
  return c < 0 ? Relation::Less : Relation::Greater;
}

}  // namespace diamond

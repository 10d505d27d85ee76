#include "diamond/ambiguity.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace diamond {

namespace {

bool coprime_central(const Monomial& a, const Monomial& b) {
  auto x = a.exponents();
  auto y = b.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0 && y[i] > 0) return false;
  }
  return true;
}

// Smaller (rule, context) first.
Ambiguity canonical(Ambiguity a) {
  if (std::tie(a.rule2, a.context2) < std::tie(a.rule1, a.context1)) {
    return flipped(a);
  }
  return a;
}

}  // namespace

Ambiguity flipped(const Ambiguity& amb) {
  Ambiguity f = amb;
  std::swap(f.rule1, f.rule2);
  std::swap(f.context1, f.context2);
  if (f.inner != 0) f.inner = 3 - f.inner;
  return f;
}

bool has_separated_families(const RewritingSystem& sys) {
  if (sys.theory().kind() != TheoryKind::Mixed) return false;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      const Monomial& a = rules[i].lead;
      const Monomial& b = rules[j].lead;
      if (!a.letters().empty() && !b.letters().empty() &&
          !coprime_central(a, b)) {
        return true;
      }
    }
  }
  return false;
}

std::vector<Ambiguity> pair_ambiguities(const RewritingSystem& sys,
                                        std::size_t i, std::size_t j,
                                        const AmbiguityOptions& options) {
  const Theory& th = sys.theory();
  if (i > j) std::swap(i, j);
  const Monomial& a = sys.rules().at(i).lead;
  const Monomial& b = sys.rules().at(j).lead;
  OverlapOptions oo;
  oo.keep_montages = options.keep_montages;
  if (th.kind() == TheoryKind::Mixed) {
    auto ea = a.exponents();
    auto eb = b.exponents();
    int lcm = 0;
    for (std::size_t k = 0; k < ea.size(); ++k) lcm += std::max(ea[k], eb[k]);
    oo.separated_max_degree =
        lcm + static_cast<int>(a.letters().size() + b.letters().size()) +
        options.separated_gap;
  }
  std::vector<Ambiguity> out;
  std::set<std::tuple<Context, Context, Monomial>> seen;
  for (auto& d : th.overlaps(a, b, oo)) {
    if (i == j && d.first == d.second) continue;
    Ambiguity amb = canonical({i, std::move(d.first), j, std::move(d.second),
                               std::move(d.superposition), d.kind, d.inner});
    if (!seen.insert({amb.context1, amb.context2, amb.superposition}).second) {
      continue;
    }
    out.push_back(std::move(amb));
  }
  return out;
}

std::vector<Ambiguity> critical_ambiguities(const RewritingSystem& sys,
                                            const AmbiguityOptions& options) {
  std::vector<Ambiguity> out;
  for (std::size_t i = 0; i < sys.rules().size(); ++i) {
    for (std::size_t j = i; j < sys.rules().size(); ++j) {
      for (auto& a : pair_ambiguities(sys, i, j, options)) {
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

Element s_polynomial(const RewritingSystem& sys, const Ambiguity& amb) {
  const Theory& th = sys.theory();
  Element s = apply(th, amb.context1, sys.rules().at(amb.rule1).lower);
  s -= apply(th, amb.context2, sys.rules().at(amb.rule2).lower);
  return s;
}

ResolutionCertificate resolve(const RewritingSystem& sys,
                              const Ambiguity& amb, std::size_t max_steps,
                              int precision) {
  ResolutionCertificate cert;
  cert.s_polynomial = s_polynomial(sys, amb);
  if (sys.series_mode()) {
    auto nf = truncated_normal_form(sys, cert.s_polynomial, precision,
                                    max_steps);
    cert.remainder = std::move(nf.representative);
    cert.truncated = nf.truncated;
  } else {
    ReductionOptions ro;
    ro.max_steps = max_steps;
    ro.record_trail = true;
    auto nf = normal_form(sys, cert.s_polynomial, ro);
    cert.remainder = std::move(nf.value);
    cert.trail = std::move(nf.trail);
  }
  cert.resolved = cert.remainder.is_zero();
  return cert;
}

std::vector<Ambiguity> second_criterion_filter(
    const RewritingSystem& sys, const std::vector<Ambiguity>& pairs) {
  const Theory& th = sys.theory();
  const auto& rules = sys.rules();
  std::vector<Ambiguity> out;
  for (const auto& amb : pairs) {
    const Monomial& l1 = rules.at(amb.rule1).lead;
    const Monomial& l2 = rules.at(amb.rule2).lead;
    bool drop = false;
    for (const auto& t3 : simple_reductions(sys, amb.superposition)) {
      if ((t3.rule == amb.rule1 && t3.context == amb.context1) ||
          (t3.rule == amb.rule2 && t3.context == amb.context2)) {
        continue;
      }
      const Monomial& l3 = rules[t3.rule].lead;
      auto s13 = th.classify(amb.superposition, amb.context1, l1, t3.context, l3);
      auto s32 = th.classify(amb.superposition, t3.context, l3, amb.context2, l2);
      if (s13 != PairShape::Critical && s32 != PairShape::Critical) {
        drop = true;
        break;
      }
    }
    if (!drop) out.push_back(amb);
  }
  return out;
}

}  // namespace diamond

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diamond/element.hpp"
#include "diamond/order.hpp"

namespace diamond {

class RewritingSystem;

/// Rational weight per generator, indexed like Theory::generator_name.
/// A monomial has norm U(mu) = 2^{sum of weights}; only the exponent is
/// stored.
struct WeightData {
  std::vector<mpq_class> weights;

  mpq_class exponent(const Monomial& m) const;
  /// Maximum exponent over the support; nullopt stands for the norm of 0.
  std::optional<mpq_class> norm(const Element& a) const;
  /// True when m lies in B_n, i.e. U(m) < 2^{1-n}.
  bool below_cutoff(const Monomial& m, int n) const;

  friend bool operator==(const WeightData&, const WeightData&) = default;
};

struct EquicontinuityVerdict {
  bool admitted = true;
  std::size_t rule = 0;     // first violating rule when rejected
  std::string violation;
};

EquicontinuityVerdict check_equicontinuity(const RewritingSystem& sys,
                                           const WeightData& w);

struct TdccVerdict {
  bool certified = false;
  std::string reason;
};

/// Structural certificate: series orders ranking by these weights, or any
/// well-founded order when no weight is negative.
TdccVerdict check_tdcc(const MonomialOrder& order, const WeightData& w);

struct SeriesNormalForm {
  Element representative;
  int precision = 1;
  bool truncated = false;  // some generated term fell into B_n
  std::size_t steps = 0;
};

/// Normal form modulo B_n. Terms are dropped as soon as they are produced
/// below the cutoff.
SeriesNormalForm truncated_normal_form(const RewritingSystem& sys,
                                       const Element& a, int precision,
                                       std::size_t max_steps = 1'000'000);

}  // namespace diamond

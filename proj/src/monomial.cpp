#include "diamond/monomial.hpp"

#include <algorithm>

namespace diamond {

const char* to_string(TheoryKind kind) {
  switch (kind) {
    case TheoryKind::FreeMonoid: return "assoc";
    case TheoryKind::Commutative: return "comm";
    case TheoryKind::Mixed: return "mixed";
    case TheoryKind::FreeMagma: return "magma";
    case TheoryKind::Path: return "path";
  }
  return "?";
}

Monomial Monomial::word(Letters letters) {
  Monomial m;
  m.kind_ = TheoryKind::FreeMonoid;
  m.letters_ = std::move(letters);
  return m;
}

Monomial Monomial::power_product(Letters exponents) {
  Monomial m;
  m.kind_ = TheoryKind::Commutative;
  m.exps_ = std::move(exponents);
  return m;
}

Monomial Monomial::mixed(Letters exponents, Letters letters) {
  Monomial m;
  m.kind_ = TheoryKind::Mixed;
  m.exps_ = std::move(exponents);
  m.letters_ = std::move(letters);
  return m;
}

Monomial Monomial::tree(Letters prefix_code) {
  Monomial m;
  m.kind_ = TheoryKind::FreeMagma;
  m.letters_ = std::move(prefix_code);
  return m;
}

Monomial Monomial::path(std::int32_t source, std::int32_t target,
                        Letters arrows) {
  Monomial m;
  m.kind_ = TheoryKind::Path;
  m.source_ = source;
  m.target_ = target;
  m.letters_ = std::move(arrows);
  return m;
}

Context Context::word(Letters left, Letters right) {
  Context c;
  c.kind_ = TheoryKind::FreeMonoid;
  c.left_ = std::move(left);
  c.right_ = std::move(right);
  return c;
}

Context Context::multiplier(Letters exponents) {
  Context c;
  c.kind_ = TheoryKind::Commutative;
  c.mult_ = std::move(exponents);
  return c;
}

Context Context::mixed(Letters exponents, Letters left, Letters right) {
  Context c;
  c.kind_ = TheoryKind::Mixed;
  c.mult_ = std::move(exponents);
  c.left_ = std::move(left);
  c.right_ = std::move(right);
  return c;
}

Context Context::tree(Letters prefix_code_with_hole) {
  Context c;
  c.kind_ = TheoryKind::FreeMagma;
  c.left_ = std::move(prefix_code_with_hole);
  return c;
}

Context Context::path(std::int32_t left_source, std::int32_t left_target,
                      Letters left, std::int32_t right_source,
                      std::int32_t right_target, Letters right) {
  Context c;
  c.kind_ = TheoryKind::Path;
  c.ls_ = left_source;
  c.lt_ = left_target;
  c.left_ = std::move(left);
  c.rs_ = right_source;
  c.rt_ = right_target;
  c.right_ = std::move(right);
  return c;
}

bool Context::is_identity() const {
  const bool no_mult =
      std::all_of(mult_.begin(), mult_.end(), [](auto e) { return e == 0; });
  switch (kind_) {
    case TheoryKind::FreeMagma:
      return left_.size() == 1 && left_[0] == kHole;
    case TheoryKind::Commutative:
      return no_mult;
    default:
      return no_mult && left_.empty() && right_.empty();
  }
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.kind()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  };
  for (auto e : m.exponents()) mix(e);
  mix(-7);
  for (auto l : m.letters()) mix(l);
  mix(m.source());
  mix(m.target());
  return h;
}

}  // namespace diamond

#include "diamond/theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "diamond/errors.hpp"

namespace diamond {

const char* to_string(OverlapClass c) {
  switch (c) {
    case OverlapClass::Overlap: return "overlap";
    case OverlapClass::Inclusion: return "inclusion";
    case OverlapClass::Separated: return "separated";
    case OverlapClass::Montage: return "montage";
  }
  return "?";
}

namespace {

void require_distinct(const std::vector<std::string>& names,
                      const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw SystemError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) {
      throw SystemError(std::string("duplicate ") + what + " '" + n + "'");
    }
  }
}

Letters concat(std::initializer_list<std::span<const std::int32_t>> parts) {
  Letters out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Letters add(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  Letters out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Letters sub(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  Letters out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Letters lcm_exps(std::span<const std::int32_t> a,
                 std::span<const std::int32_t> b) {
  Letters out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

bool dominates(std::span<const std::int32_t> a,
               std::span<const std::int32_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

int total(std::span<const std::int32_t> e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool matches_at(std::span<const std::int32_t> hay, std::size_t pos,
                std::span<const std::int32_t> needle) {
  if (pos + needle.size() > hay.size()) return false;
  return std::equal(needle.begin(), needle.end(), hay.begin() + pos);
}

// Index one past the subtree starting at `pos` in a prefix code.
std::size_t subtree_end(std::span<const std::int32_t> code, std::size_t pos) {
  int open = 1;
  while (open > 0) {
    open += code[pos] == kMagmaNode ? 1 : -1;
    ++pos;
  }
  return pos;
}

Letters replace_hole(std::span<const std::int32_t> code, std::int32_t hole,
                     std::span<const std::int32_t> filler) {
  Letters out;
  out.reserve(code.size() + filler.size());
  for (auto s : code) {
    if (s == hole) {
      out.insert(out.end(), filler.begin(), filler.end());
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::size_t hole_position(std::span<const std::int32_t> code) {
  return static_cast<std::size_t>(
      std::find(code.begin(), code.end(), kHole) - code.begin());
}

// A placement of two words inside a superposition word.
struct Placement {
  Letters word;
  std::size_t first_pos;
  std::size_t second_pos;
  OverlapClass kind;
};

// Proper overlaps and inclusions of two nonempty words.
std::vector<Placement> word_placements(std::span<const std::int32_t> a,
                                       std::span<const std::int32_t> b) {
  std::vector<Placement> out;
  const std::size_t m = a.size(), n = b.size();
  for (std::size_t k = 1; k < m && k < n; ++k) {
    if (std::equal(a.end() - k, a.end(), b.begin())) {
      out.push_back({concat({a, b.subspan(k)}), 0, m - k,
                     OverlapClass::Overlap});
    }
  }
  for (std::size_t k = 1; k < m && k < n; ++k) {
    if (std::equal(b.end() - k, b.end(), a.begin())) {
      out.push_back({concat({b, a.subspan(k)}), n - k, 0,
                     OverlapClass::Overlap});
    }
  }
  if (n <= m) {
    for (std::size_t p = 0; p + n <= m; ++p) {
      if (matches_at(a, p, b)) {
        out.push_back({Letters(a.begin(), a.end()), 0, p,
                       OverlapClass::Inclusion});
      }
    }
  }
  if (m < n) {
    for (std::size_t p = 0; p + m <= n; ++p) {
      if (matches_at(b, p, a)) {
        out.push_back({Letters(b.begin(), b.end()), p, 0,
                       OverlapClass::Inclusion});
      }
    }
  }
  return out;
}

// Every word of the given length over `letters` symbols.
std::vector<Letters> all_words(std::size_t letters, int length) {
  std::vector<Letters> out{Letters{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Letters> next;
    next.reserve(out.size() * letters);
    for (const auto& w : out) {
      for (std::size_t l = 0; l < letters; ++l) {
        Letters x = w;
        x.push_back(static_cast<std::int32_t>(l));
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Letters> all_exponents(std::size_t vars, int degree) {
  std::vector<Letters> out;
  Letters cur(vars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (vars == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == vars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, degree);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Theory Theory::free_monoid(std::vector<std::string> alphabet) {
  if (alphabet.empty()) throw SystemError("alphabet must be nonempty");
  require_distinct(alphabet, "generator");
  Theory t;
  t.kind_ = TheoryKind::FreeMonoid;
  t.alphabet_ = std::move(alphabet);
  return t;
}

Theory Theory::commutative(std::vector<std::string> alphabet) {
  Theory t = free_monoid(std::move(alphabet));
  t.kind_ = TheoryKind::Commutative;
  return t;
}

Theory Theory::free_magma(std::vector<std::string> alphabet) {
  Theory t = free_monoid(std::move(alphabet));
  t.kind_ = TheoryKind::FreeMagma;
  return t;
}

Theory Theory::mixed(std::vector<std::string> central,
                     std::vector<std::string> letters) {
  if (central.empty() || letters.empty()) {
    throw SystemError("mixed theory needs nonempty central and word alphabets");
  }
  std::vector<std::string> all = central;
  all.insert(all.end(), letters.begin(), letters.end());
  require_distinct(all, "generator");
  Theory t;
  t.kind_ = TheoryKind::Mixed;
  t.central_ = std::move(central);
  t.alphabet_ = std::move(letters);
  return t;
}

Theory Theory::path(std::vector<std::string> vertices,
                    std::vector<Arrow> arrows) {
  if (vertices.empty()) throw SystemError("quiver needs at least one vertex");
  require_distinct(vertices, "vertex");
  std::vector<std::string> names;
  for (const auto& a : arrows) {
    const auto nv = static_cast<std::int32_t>(vertices.size());
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv) {
      throw SystemError("arrow '" + a.name + "' references a missing vertex");
    }
    names.push_back(a.name);
  }
  require_distinct(names, "arrow");
  Theory t;
  t.kind_ = TheoryKind::Path;
  t.vertices_ = std::move(vertices);
  t.arrows_ = std::move(arrows);
  return t;
}

std::size_t Theory::generator_count() const {
  switch (kind_) {
    case TheoryKind::Mixed: return central_.size() + alphabet_.size();
    case TheoryKind::Path: return arrows_.size();
    default: return alphabet_.size();
  }
}

const std::string& Theory::generator_name(std::size_t index) const {
  switch (kind_) {
    case TheoryKind::Mixed:
      return index < central_.size() ? central_.at(index)
                                     : alphabet_.at(index - central_.size());
    case TheoryKind::Path: return arrows_.at(index).name;
    default: return alphabet_.at(index);
  }
}

std::optional<std::size_t> Theory::find_generator(
    const std::string& name) const {
  for (std::size_t i = 0; i < generator_count(); ++i) {
    if (generator_name(i) == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Theory::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomials

std::optional<Monomial> Theory::one() const {
  switch (kind_) {
    case TheoryKind::FreeMonoid: return Monomial::word({});
    case TheoryKind::Commutative:
      return Monomial::power_product(Letters(alphabet_.size(), 0));
    case TheoryKind::Mixed:
      return Monomial::mixed(Letters(central_.size(), 0), {});
    default: return std::nullopt;
  }
}

Monomial Theory::generator(std::size_t index) const {
  if (index >= generator_count()) {
    throw PreconditionError("generator index out of range");
  }
  const auto g = static_cast<std::int32_t>(index);
  switch (kind_) {
    case TheoryKind::FreeMonoid: return Monomial::word({g});
    case TheoryKind::Commutative: {
      Letters e(alphabet_.size(), 0);
      e[index] = 1;
      return Monomial::power_product(std::move(e));
    }
    case TheoryKind::Mixed: {
      Letters e(central_.size(), 0);
      if (index < central_.size()) {
        e[index] = 1;
        return Monomial::mixed(std::move(e), {});
      }
      return Monomial::mixed(
          std::move(e), {static_cast<std::int32_t>(index - central_.size())});
    }
    case TheoryKind::FreeMagma: return Monomial::tree({g});
    case TheoryKind::Path: {
      const Arrow& a = arrows_[index];
      return Monomial::path(a.source, a.target, {g});
    }
  }
  return {};
}

Monomial Theory::vertex(std::size_t index) const {
  if (kind_ != TheoryKind::Path || index >= vertices_.size()) {
    throw PreconditionError("vertex requires a path theory and valid index");
  }
  const auto v = static_cast<std::int32_t>(index);
  return Monomial::path(v, v, {});
}

void Theory::check(const Monomial& m) const {
  if (m.kind() != kind_) {
    throw TheoryMismatch(std::string("monomial of theory ") +
                         to_string(m.kind()) + " used with theory " +
                         to_string(kind_));
  }
}

void Theory::validate(const Monomial& m) const {
  check(m);
  auto bad = [](const char* why) { throw TheoryMismatch(why); };
  const auto n = static_cast<std::int32_t>(alphabet_.size());
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      for (auto l : m.letters()) {
        if (l < 0 || l >= n) bad("letter out of range");
      }
      break;
    case TheoryKind::Commutative:
      if (m.exponents().size() != alphabet_.size()) bad("exponent arity");
      for (auto e : m.exponents()) {
        if (e < 0) bad("negative exponent");
      }
      break;
    case TheoryKind::Mixed:
      if (m.exponents().size() != central_.size()) bad("exponent arity");
      for (auto e : m.exponents()) {
        if (e < 0) bad("negative exponent");
      }
      for (auto l : m.letters()) {
        if (l < 0 || l >= n) bad("letter out of range");
      }
      break;
    case TheoryKind::FreeMagma: {
      auto code = m.letters();
      if (code.empty()) bad("empty magma tree");
      for (auto s : code) {
        if (s != kMagmaNode && (s < 0 || s >= n)) bad("leaf out of range");
      }
      int open = 1;
      for (std::size_t i = 0; i < code.size(); ++i) {
        if (open == 0) bad("malformed magma tree");
        open += code[i] == kMagmaNode ? 1 : -1;
      }
      if (open != 0) bad("malformed magma tree");
      break;
    }
    case TheoryKind::Path: {
      const auto nv = static_cast<std::int32_t>(vertices_.size());
      if (m.source() < 0 || m.source() >= nv) bad("path source out of range");
      std::int32_t at = m.source();
      for (auto a : m.letters()) {
        if (a < 0 || a >= static_cast<std::int32_t>(arrows_.size())) {
          bad("arrow out of range");
        }
        if (arrows_[a].source != at) bad("arrows do not compose");
        at = arrows_[a].target;
      }
      if (at != m.target()) bad("path target mismatch");
      break;
    }
  }
}

void Theory::validate(const Context& c) const {
  if (c.kind() != kind_) {
    throw TheoryMismatch(std::string("context of theory ") +
                         to_string(c.kind()) + " used with theory " +
                         to_string(kind_));
  }
}

std::optional<Monomial> Theory::multiply(const Monomial& a,
                                         const Monomial& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      return Monomial::word(concat({a.letters(), b.letters()}));
    case TheoryKind::Commutative:
      return Monomial::power_product(add(a.exponents(), b.exponents()));
    case TheoryKind::Mixed:
      return Monomial::mixed(add(a.exponents(), b.exponents()),
                             concat({a.letters(), b.letters()}));
    case TheoryKind::FreeMagma: {
      Letters code{kMagmaNode};
      code.insert(code.end(), a.letters().begin(), a.letters().end());
      code.insert(code.end(), b.letters().begin(), b.letters().end());
      return Monomial::tree(std::move(code));
    }
    case TheoryKind::Path:
      if (a.target() != b.source()) return std::nullopt;
      return Monomial::path(a.source(), b.target(),
                            concat({a.letters(), b.letters()}));
  }
  return std::nullopt;
}

int Theory::degree(const Monomial& m) const {
  check(m);
  switch (kind_) {
    case TheoryKind::Commutative: return total(m.exponents());
    case TheoryKind::Mixed:
      return total(m.exponents()) + static_cast<int>(m.letters().size());
    case TheoryKind::FreeMagma:
      return static_cast<int>(std::count_if(
          m.letters().begin(), m.letters().end(),
          [](auto s) { return s >= 0; }));
    default: return static_cast<int>(m.letters().size());
  }
}

std::int32_t Theory::vertex_after(const Monomial& path,
                                  std::size_t steps) const {
  if (steps == 0) return path.source();
  return arrows_[path.letters()[steps - 1]].target;
}

Monomial Theory::with_letters(const Monomial& like, Letters exps,
                              Letters letters) const {
  switch (kind_) {
    case TheoryKind::FreeMonoid: return Monomial::word(std::move(letters));
    case TheoryKind::Mixed:
      return Monomial::mixed(std::move(exps), std::move(letters));
    case TheoryKind::Path: {
      std::int32_t src = like.source();
      std::int32_t dst = letters.empty() ? src : arrows_[letters.back()].target;
      if (!letters.empty()) src = arrows_[letters.front()].source;
      return Monomial::path(src, dst, std::move(letters));
    }
    default: break;
  }
  throw PreconditionError("with_letters on a non-word theory");
}

// ---------------------------------------------------------------------------
// Contexts

Context Theory::identity(const Monomial& mu) const {
  check(mu);
  switch (kind_) {
    case TheoryKind::FreeMonoid: return Context::word({}, {});
    case TheoryKind::Commutative:
      return Context::multiplier(Letters(alphabet_.size(), 0));
    case TheoryKind::Mixed:
      return Context::mixed(Letters(central_.size(), 0), {}, {});
    case TheoryKind::FreeMagma: return Context::tree({kHole});
    case TheoryKind::Path:
      return Context::path(mu.source(), mu.source(), {}, mu.target(),
                           mu.target(), {});
  }
  return {};
}

// Context embedding the length-`len` piece of mu's word starting at `pos`.
Context Theory::word_context(const Monomial& mu, std::size_t pos,
                             std::size_t len) const {
  auto w = mu.letters();
  Letters left(w.begin(), w.begin() + pos);
  Letters right(w.begin() + pos + len, w.end());
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      return Context::word(std::move(left), std::move(right));
    case TheoryKind::Path:
      return Context::path(mu.source(), vertex_after(mu, pos), std::move(left),
                           vertex_after(mu, pos + len), mu.target(),
                           std::move(right));
    default: break;
  }
  throw PreconditionError("word_context on a non-word theory");
}

std::optional<Monomial> Theory::apply(const Context& v,
                                      const Monomial& mu) const {
  check(mu);
  validate(v);
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      return Monomial::word(concat({v.left(), mu.letters(), v.right()}));
    case TheoryKind::Commutative:
      return Monomial::power_product(add(mu.exponents(), v.multiplier()));
    case TheoryKind::Mixed:
      return Monomial::mixed(add(mu.exponents(), v.multiplier()),
                             concat({v.left(), mu.letters(), v.right()}));
    case TheoryKind::FreeMagma:
      return Monomial::tree(replace_hole(v.left(), kHole, mu.letters()));
    case TheoryKind::Path:
      if (v.left_target() != mu.source() || v.right_source() != mu.target()) {
        return std::nullopt;
      }
      return Monomial::path(v.left_source(), v.right_target(),
                            concat({v.left(), mu.letters(), v.right()}));
  }
  return std::nullopt;
}

std::optional<Context> Theory::compose(const Context& outer,
                                       const Context& inner) const {
  validate(outer);
  validate(inner);
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      return Context::word(concat({outer.left(), inner.left()}),
                           concat({inner.right(), outer.right()}));
    case TheoryKind::Commutative:
      return Context::multiplier(add(outer.multiplier(), inner.multiplier()));
    case TheoryKind::Mixed:
      return Context::mixed(add(outer.multiplier(), inner.multiplier()),
                            concat({outer.left(), inner.left()}),
                            concat({inner.right(), outer.right()}));
    case TheoryKind::FreeMagma:
      return Context::tree(replace_hole(outer.left(), kHole, inner.left()));
    case TheoryKind::Path:
      if (outer.left_target() != inner.left_source() ||
          inner.right_target() != outer.right_source()) {
        return std::nullopt;
      }
      return Context::path(outer.left_source(), inner.left_target(),
                           concat({outer.left(), inner.left()}),
                           inner.right_source(), outer.right_target(),
                           concat({inner.right(), outer.right()}));
  }
  return std::nullopt;
}

std::optional<Monomial> Theory::apply(const BiContext& w,
                                      const Monomial& first,
                                      const Monomial& second) const {
  check(first);
  check(second);
  if (w.kind != kind_) throw TheoryMismatch("bicontext of another theory");
  const Monomial& a = w.second_first ? second : first;
  const Monomial& b = w.second_first ? first : second;
  switch (kind_) {
    case TheoryKind::Commutative:
      return Monomial::power_product(
          add(add(w.multiplier, first.exponents()), second.exponents()));
    case TheoryKind::FreeMagma: {
      Letters code = replace_hole(w.tree, kHole, first.letters());
      return Monomial::tree(replace_hole(code, kSecondHole, second.letters()));
    }
    case TheoryKind::FreeMonoid:
      return Monomial::word(
          concat({w.left, a.letters(), w.middle, b.letters(), w.right}));
    case TheoryKind::Mixed:
      return Monomial::mixed(
          add(add(w.multiplier, first.exponents()), second.exponents()),
          concat({w.left, a.letters(), w.middle, b.letters(), w.right}));
    case TheoryKind::Path: {
      // Pieces must compose: left·a·middle·b·right.
      std::int32_t at = w.left.empty() ? a.source()
                                       : arrows_[w.left.front()].source;
      Letters word;
      auto walk = [&](std::span<const std::int32_t> arrows,
                      std::int32_t src, std::int32_t dst) {
        if (arrows.empty()) {
          if (src >= 0 && src != at) return false;
          if (dst >= 0) at = dst;
          return true;
        }
        for (auto arr : arrows) {
          if (arrows_[arr].source != at) return false;
          at = arrows_[arr].target;
          word.push_back(arr);
        }
        return true;
      };
      const bool ok = walk(w.left, -1, -1) &&
                      walk(a.letters(), a.source(), a.target()) &&
                      walk(w.middle, -1, -1) &&
                      walk(b.letters(), b.source(), b.target()) &&
                      walk(w.right, -1, -1);
      if (!ok) return std::nullopt;
      std::int32_t src =
          word.empty() ? a.source() : arrows_[word.front()].source;
      return Monomial::path(src, at, std::move(word));
    }
  }
  return std::nullopt;
}

std::vector<Context> Theory::divisions(const Monomial& mu,
                                       const Monomial& nu) const {
  check(mu);
  check(nu);
  std::vector<Context> out;
  switch (kind_) {
    case TheoryKind::FreeMonoid:
    case TheoryKind::Path: {
      auto w = mu.letters();
      auto x = nu.letters();
      if (kind_ == TheoryKind::Path && x.empty()) {
        for (std::size_t p = 0; p <= w.size(); ++p) {
          if (vertex_after(mu, p) == nu.source()) {
            out.push_back(word_context(mu, p, 0));
          }
        }
        break;
      }
      for (std::size_t p = 0; p + x.size() <= w.size(); ++p) {
        if (matches_at(w, p, x)) out.push_back(word_context(mu, p, x.size()));
      }
      break;
    }
    case TheoryKind::Commutative:
      if (dominates(mu.exponents(), nu.exponents())) {
        out.push_back(Context::multiplier(sub(mu.exponents(), nu.exponents())));
      }
      break;
    case TheoryKind::Mixed: {
      if (!dominates(mu.exponents(), nu.exponents())) break;
      Letters k = sub(mu.exponents(), nu.exponents());
      auto w = mu.letters();
      auto x = nu.letters();
      if (x.empty()) {
        out.push_back(Context::mixed(k, {}, Letters(w.begin(), w.end())));
        break;
      }
      for (std::size_t p = 0; p + x.size() <= w.size(); ++p) {
        if (matches_at(w, p, x)) {
          out.push_back(Context::mixed(k, Letters(w.begin(), w.begin() + p),
                                       Letters(w.begin() + p + x.size(),
                                               w.end())));
        }
      }
      break;
    }
    case TheoryKind::FreeMagma: {
      auto code = mu.letters();
      auto x = nu.letters();
      for (std::size_t p = 0; p + x.size() <= code.size(); ++p) {
        if (subtree_end(code, p) - p == x.size() && matches_at(code, p, x)) {
          Letters c(code.begin(), code.begin() + p);
          c.push_back(kHole);
          c.insert(c.end(), code.begin() + p + x.size(), code.end());
          out.push_back(Context::tree(std::move(c)));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Theory::divides(const Monomial& nu, const Monomial& mu) const {
  check(mu);
  check(nu);
  switch (kind_) {
    case TheoryKind::Commutative:
      return dominates(mu.exponents(), nu.exponents());
    case TheoryKind::Mixed: {
      if (!dominates(mu.exponents(), nu.exponents())) return false;
      auto w = mu.letters();
      auto x = nu.letters();
      return x.empty() ||
             std::search(w.begin(), w.end(), x.begin(), x.end()) != w.end();
    }
    case TheoryKind::FreeMonoid: {
      auto w = mu.letters();
      auto x = nu.letters();
      return x.empty() ||
             std::search(w.begin(), w.end(), x.begin(), x.end()) != w.end();
    }
    default: return !divisions(mu, nu).empty();
  }
}

// ---------------------------------------------------------------------------
// Overlaps

std::vector<OverlapDatum> Theory::overlaps(const Monomial& mu1,
                                           const Monomial& mu2,
                                           const OverlapOptions& options) const {
  check(mu1);
  check(mu2);
  std::vector<OverlapDatum> out;
  auto classify_inclusion = [](OverlapDatum& d) {
    if (d.kind == OverlapClass::Montage || d.kind == OverlapClass::Separated) {
      return;
    }
    if (d.first.is_identity()) {
      d.kind = OverlapClass::Inclusion;
      d.inner = 2;
    } else if (d.second.is_identity()) {
      d.kind = OverlapClass::Inclusion;
      d.inner = 1;
    } else {
      d.kind = OverlapClass::Overlap;
      d.inner = 0;
    }
  };

  switch (kind_) {
    case TheoryKind::Commutative: {
      const bool cop = coprime(mu1.exponents(), mu2.exponents());
      if (cop && !options.keep_montages) break;
      auto s = lcm_superposition(mu1, mu2);
      OverlapDatum d{s.lcm, s.first, s.second, OverlapClass::Overlap, 0, {}};
      if (cop) {
        d.kind = OverlapClass::Montage;
        BiContext w;
        w.kind = kind_;
        w.multiplier = Letters(alphabet_.size(), 0);
        d.composition = w;
      } else {
        classify_inclusion(d);
      }
      out.push_back(std::move(d));
      break;
    }

    case TheoryKind::FreeMonoid:
    case TheoryKind::Path: {
      auto a = mu1.letters();
      auto b = mu2.letters();
      if (kind_ == TheoryKind::Path && (a.empty() || b.empty())) {
        // Vertex leads embed at every visit of their vertex.
        if (a.empty() && b.empty()) {
          if (mu1 == mu2) {
            out.push_back({mu1, identity(mu1), identity(mu2),
                           OverlapClass::Inclusion, 2, {}});
          }
          break;
        }
        const bool first_is_vertex = a.empty();
        const Monomial& outer = first_is_vertex ? mu2 : mu1;
        const Monomial& vtx = first_is_vertex ? mu1 : mu2;
        for (const auto& c : divisions(outer, vtx)) {
          OverlapDatum d{outer,
                         first_is_vertex ? c : identity(outer),
                         first_is_vertex ? identity(outer) : c,
                         OverlapClass::Inclusion, first_is_vertex ? 1 : 2, {}};
          out.push_back(std::move(d));
        }
        break;
      }
      for (auto& p : word_placements(a, b)) {
        Monomial sup = with_letters(mu1, {}, p.word);
        OverlapDatum d{sup, word_context(sup, p.first_pos, a.size()),
                       word_context(sup, p.second_pos, b.size()), p.kind, 0,
                       {}};
        classify_inclusion(d);
        out.push_back(std::move(d));
      }
      if (options.keep_montages && !a.empty() && !b.empty()) {
        for (bool second_first : {false, true}) {
          const Monomial& x = second_first ? mu2 : mu1;
          const Monomial& y = second_first ? mu1 : mu2;
          auto prod = multiply(x, y);
          if (!prod) continue;
          const std::size_t p1 = second_first ? b.size() : 0;
          const std::size_t p2 = second_first ? 0 : a.size();
          BiContext w;
          w.kind = kind_;
          w.second_first = second_first;
          out.push_back({*prod, word_context(*prod, p1, a.size()),
                         word_context(*prod, p2, b.size()),
                         OverlapClass::Montage, 0, w});
        }
      }
      break;
    }

    case TheoryKind::Mixed: {
      auto c1 = mu1.exponents();
      auto c2 = mu2.exponents();
      const Letters lcm = lcm_exps(c1, c2);
      const Letters k1 = sub(lcm, c1);
      const Letters k2 = sub(lcm, c2);
      const bool cop = coprime(c1, c2);
      auto a = mu1.letters();
      auto b = mu2.letters();
      auto emit = [&](Letters word, std::size_t p1, std::size_t p2,
                      OverlapClass kind, std::optional<BiContext> w) {
        auto ctx = [&](const Letters& k, std::size_t pos, std::size_t len) {
          if (len == 0) {
            return Context::mixed(k, {}, word);
          }
          return Context::mixed(k, Letters(word.begin(), word.begin() + pos),
                                Letters(word.begin() + pos + len, word.end()));
        };
        OverlapDatum d{Monomial::mixed(lcm, word), ctx(k1, p1, a.size()),
                       ctx(k2, p2, b.size()), kind, 0, std::move(w)};
        classify_inclusion(d);
        out.push_back(std::move(d));
      };
      if (a.empty() || b.empty()) {
        // An empty word is central: a single canonical placement.
        Letters word(a.empty() ? b.begin() : a.begin(),
                     a.empty() ? b.end() : a.end());
        if (cop) {
          if (options.keep_montages) {
            BiContext w;
            w.kind = kind_;
            w.multiplier = Letters(central_.size(), 0);
            emit(word, 0, 0, OverlapClass::Montage, w);
          }
        } else {
          emit(word, 0, 0, OverlapClass::Overlap, std::nullopt);
        }
        break;
      }
      for (auto& p : word_placements(a, b)) {
        emit(p.word, p.first_pos, p.second_pos, p.kind, std::nullopt);
      }
      if (cop) {
        if (options.keep_montages) {
          for (bool second_first : {false, true}) {
            BiContext w;
            w.kind = kind_;
            w.multiplier = Letters(central_.size(), 0);
            w.second_first = second_first;
            emit(second_first ? concat({b, a}) : concat({a, b}),
                 second_first ? b.size() : 0, second_first ? 0 : a.size(),
                 OverlapClass::Montage, w);
          }
        }
      } else {
        const int base = total(lcm) + static_cast<int>(a.size() + b.size());
        for (int gap = 0; base + gap <= options.separated_max_degree; ++gap) {
          for (const auto& g : all_words(alphabet_.size(), gap)) {
            emit(concat({a, g, b}), 0, a.size() + g.size(),
                 OverlapClass::Separated, std::nullopt);
            emit(concat({b, g, a}), b.size() + g.size(), 0,
                 OverlapClass::Separated, std::nullopt);
          }
        }
      }
      break;
    }

    case TheoryKind::FreeMagma: {
      auto a = mu1.letters();
      auto b = mu2.letters();
      for (const auto& c : divisions(mu1, mu2)) {
        out.push_back({mu1, identity(mu1), c, OverlapClass::Inclusion, 2, {}});
      }
      if (a.size() < b.size()) {
        for (const auto& c : divisions(mu2, mu1)) {
          out.push_back(
              {mu2, c, identity(mu2), OverlapClass::Inclusion, 1, {}});
        }
      }
      if (options.keep_montages) {
        for (bool second_first : {false, true}) {
          BiContext w;
          w.kind = kind_;
          w.tree = second_first ? Letters{kMagmaNode, kSecondHole, kHole}
                                : Letters{kMagmaNode, kHole, kSecondHole};
          auto prod = *apply(w, mu1, mu2);
          Letters c1 = replace_hole(w.tree, kSecondHole, b);
          Letters c2 = replace_hole(replace_hole(w.tree, kHole, a),
                                    kSecondHole, Letters{kHole});
          out.push_back({prod, Context::tree(std::move(c1)),
                         Context::tree(std::move(c2)), OverlapClass::Montage,
                         0, w});
        }
      }
      break;
    }
  }
  return out;
}

LcmSuperposition Theory::lcm_superposition(const Monomial& mu1,
                                           const Monomial& mu2) const {
  if (kind_ != TheoryKind::Commutative) {
    throw PreconditionError("lcm_superposition requires the commutative theory");
  }
  check(mu1);
  check(mu2);
  Letters l = lcm_exps(mu1.exponents(), mu2.exponents());
  return {Monomial::power_product(l),
          Context::multiplier(sub(l, mu1.exponents())),
          Context::multiplier(sub(l, mu2.exponents()))};
}

bool Theory::uniform_equivalent(const Monomial& mu, const Monomial& nu) const {
  if (kind_ != TheoryKind::Path) {
    throw PreconditionError("uniform_equivalent requires the path theory");
  }
  check(mu);
  check(nu);
  return mu.source() == nu.source() && mu.target() == nu.target();
}

PairShape Theory::classify(const Monomial& mu, const Context& v1,
                           const Monomial& lead1, const Context& v2,
                           const Monomial& lead2) const {
  check(mu);
  switch (kind_) {
    case TheoryKind::Commutative: {
      if (coprime(lead1.exponents(), lead2.exponents())) {
        return PairShape::Montage;
      }
      Letters l = lcm_exps(lead1.exponents(), lead2.exponents());
      return std::equal(l.begin(), l.end(), mu.exponents().begin())
                 ? PairShape::Critical
                 : PairShape::ProperShadow;
    }
    case TheoryKind::FreeMagma: {
      const std::size_t p1 = hole_position(v1.left());
      const std::size_t p2 = hole_position(v2.left());
      const std::size_t e1 = p1 + lead1.letters().size();
      const std::size_t e2 = p2 + lead2.letters().size();
      if (e1 <= p2 || e2 <= p1) return PairShape::Montage;
      const std::size_t outer = std::min(p1, p2);
      const std::size_t outer_end = std::max(e1, e2);
      return outer == 0 && outer_end == mu.letters().size()
                 ? PairShape::Critical
                 : PairShape::ProperShadow;
    }
    default: {
      const std::size_t p1 = v1.left().size();
      const std::size_t p2 = v2.left().size();
      const std::size_t e1 = p1 + lead1.letters().size();
      const std::size_t e2 = p2 + lead2.letters().size();
      const bool disjoint = e1 <= p2 || e2 <= p1;
      bool common_factor = false;
      if (kind_ == TheoryKind::Mixed) {
        const bool cop = coprime(lead1.exponents(), lead2.exponents());
        if (disjoint && cop) return PairShape::Montage;
        Letters l = lcm_exps(lead1.exponents(), lead2.exponents());
        common_factor =
            !std::equal(l.begin(), l.end(), mu.exponents().begin());
      } else if (disjoint) {
        return PairShape::Montage;
      }
      const bool stripped = std::min(p1, p2) > 0 ||
                            std::max(e1, e2) < mu.letters().size();
      return common_factor || stripped ? PairShape::ProperShadow
                                       : PairShape::Critical;
    }
  }
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Monomial> Theory::monomials_of_degree(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  switch (kind_) {
    case TheoryKind::FreeMonoid:
      for (auto& w : all_words(alphabet_.size(), degree)) {
        out.push_back(Monomial::word(std::move(w)));
      }
      break;
    case TheoryKind::Commutative:
      for (auto& e : all_exponents(alphabet_.size(), degree)) {
        out.push_back(Monomial::power_product(std::move(e)));
      }
      break;
    case TheoryKind::Mixed:
      for (int c = 0; c <= degree; ++c) {
        auto exps = all_exponents(central_.size(), c);
        auto words = all_words(alphabet_.size(), degree - c);
        for (const auto& e : exps) {
          for (const auto& w : words) out.push_back(Monomial::mixed(e, w));
        }
      }
      break;
    case TheoryKind::FreeMagma: {
      std::vector<std::vector<Letters>> by_leaves(
          static_cast<std::size_t>(std::max(degree, 1)) + 1);
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        by_leaves[1].push_back({static_cast<std::int32_t>(l)});
      }
      for (int n = 2; n <= degree; ++n) {
        for (int k = 1; k < n; ++k) {
          for (const auto& l : by_leaves[k]) {
            for (const auto& r : by_leaves[n - k]) {
              Letters code{kMagmaNode};
              code.insert(code.end(), l.begin(), l.end());
              code.insert(code.end(), r.begin(), r.end());
              by_leaves[n].push_back(std::move(code));
            }
          }
        }
      }
      if (degree >= 1) {
        for (auto& c : by_leaves[degree]) out.push_back(Monomial::tree(c));
      }
      break;
    }
    case TheoryKind::Path: {
      if (degree == 0) {
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
          out.push_back(vertex(v));
        }
        break;
      }
      std::vector<Monomial> cur;
      for (std::size_t a = 0; a < arrows_.size(); ++a) {
        cur.push_back(generator(a));
      }
      for (int d = 1; d < degree; ++d) {
        std::vector<Monomial> next;
        for (const auto& p : cur) {
          for (std::size_t a = 0; a < arrows_.size(); ++a) {
            if (auto q = multiply(p, generator(a))) next.push_back(*q);
          }
        }
        cur = std::move(next);
      }
      out = std::move(cur);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string Theory::format_word(std::span<const std::int32_t> letters,
                                std::size_t offset) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += "*";
    out += generator_name(offset + static_cast<std::size_t>(letters[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string Theory::format_tree(std::span<const std::int32_t> code,
                                std::size_t& pos) const {
  const std::int32_t s = code[pos++];
  if (s == kHole || s == kSecondHole) return s == kHole ? "_" : "__";
  if (s != kMagmaNode) return alphabet_.at(static_cast<std::size_t>(s));
  std::string l = format_tree(code, pos);
  std::string r = format_tree(code, pos);
  return "(" + l + "*" + r + ")";
}

std::string Theory::format(const Monomial& m) const {
  check(m);
  switch (kind_) {
    case TheoryKind::FreeMonoid: {
      std::string s = format_word(m.letters(), 0);
      return s.empty() ? "1" : s;
    }
    case TheoryKind::Commutative:
    case TheoryKind::Mixed: {
      std::string s;
      auto e = m.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += generator_name(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
      if (kind_ == TheoryKind::Mixed) {
        std::string w = format_word(m.letters(), central_.size());
        if (!w.empty()) s += (s.empty() ? "" : "*") + w;
      }
      return s.empty() ? "1" : s;
    }
    case TheoryKind::FreeMagma: {
      std::size_t pos = 0;
      return format_tree(m.letters(), pos);
    }
    case TheoryKind::Path:
      if (m.letters().empty()) {
        return "e" + vertices_.at(static_cast<std::size_t>(m.source()));
      }
      return format_word(m.letters(), 0);
  }
  return "?";
}

std::string Theory::format(const Context& v) const {
  validate(v);
  if (kind_ == TheoryKind::FreeMagma) {
    std::size_t pos = 0;
    return format_tree(v.left(), pos);
  }
  std::vector<std::string> parts;
  if (kind_ == TheoryKind::Commutative || kind_ == TheoryKind::Mixed) {
    auto e = v.multiplier();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      parts.push_back(generator_name(i) +
                      (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
    }
  }
  const std::size_t offset = kind_ == TheoryKind::Mixed ? central_.size() : 0;
  if (!v.left().empty()) parts.push_back(format_word(v.left(), offset));
  parts.push_back("_");
  if (!v.right().empty()) parts.push_back(format_word(v.right(), offset));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

}  // namespace diamond

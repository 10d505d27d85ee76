#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace diamond {

enum class TheoryKind {
  FreeMonoid,   // words X*
  Commutative,  // power products
  Mixed,        // central power products times words, X1• × X2*
  FreeMagma,    // nonassociative binary trees Mag(X)
  Path,         // walks in a quiver, vertices as length-0 paths
};

const char* to_string(TheoryKind kind);

using Letters = std::vector<std::int32_t>;

// Symbols used in prefix-encoded magma trees next to leaf labels (>= 0).
inline constexpr std::int32_t kMagmaNode = -1;
inline constexpr std::int32_t kHole = -2;
inline constexpr std::int32_t kSecondHole = -3;

/// A basis monomial of one of the five theories.
///
/// The payload is stored flat so that all theories share hashing and the
/// structural order:
///   FreeMonoid   letters = word
///   Commutative  exponents = exponent vector (one entry per generator)
///   Mixed        exponents over the central alphabet, letters = word
///   FreeMagma    letters = prefix code (kMagmaNode for inner nodes)
///   Path         letters = arrows, source/target = endpoint vertices
///
/// Construct through Theory, which validates the payload.
class Monomial {
 public:
  Monomial() = default;

  static Monomial word(Letters letters);
  static Monomial power_product(Letters exponents);
  static Monomial mixed(Letters exponents, Letters letters);
  static Monomial tree(Letters prefix_code);
  static Monomial path(std::int32_t source, std::int32_t target,
                       Letters arrows);

  TheoryKind kind() const noexcept { return kind_; }
  std::span<const std::int32_t> exponents() const noexcept { return exps_; }
  std::span<const std::int32_t> letters() const noexcept { return letters_; }
  std::int32_t source() const noexcept { return source_; }
  std::int32_t target() const noexcept { return target_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Structural order; carries no algebraic meaning.
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

 private:
  TheoryKind kind_ = TheoryKind::FreeMonoid;
  Letters exps_;
  Letters letters_;
  std::int32_t source_ = -1;
  std::int32_t target_ = -1;
};

/// One-hole embedding v, the map b ↦ v(b) on monomials.
///   FreeMonoid   b ↦ left·b·right
///   Commutative  b ↦ multiplier·b
///   Mixed        b ↦ multiplier·left·b·right
///   FreeMagma    left = prefix code of a tree containing one kHole
///   Path         b ↦ λ·b·ρ with λ = (left_source → left_target, left),
///                ρ = (right_source → right_target, right)
class Context {
 public:
  Context() = default;

  static Context word(Letters left, Letters right);
  static Context multiplier(Letters exponents);
  static Context mixed(Letters exponents, Letters left, Letters right);
  static Context tree(Letters prefix_code_with_hole);
  static Context path(std::int32_t left_source, std::int32_t left_target,
                      Letters left, std::int32_t right_source,
                      std::int32_t right_target, Letters right);

  TheoryKind kind() const noexcept { return kind_; }
  std::span<const std::int32_t> multiplier() const noexcept { return mult_; }
  std::span<const std::int32_t> left() const noexcept { return left_; }
  std::span<const std::int32_t> right() const noexcept { return right_; }
  std::int32_t left_source() const noexcept { return ls_; }
  std::int32_t left_target() const noexcept { return lt_; }
  std::int32_t right_source() const noexcept { return rs_; }
  std::int32_t right_target() const noexcept { return rt_; }

  /// True when the context fixes every monomial it can be applied to
  /// (for paths: λ and ρ are vertices).
  bool is_identity() const;

  friend bool operator==(const Context&, const Context&) = default;
  friend std::strong_ordering operator<=>(const Context&,
                                          const Context&) = default;

 private:
  TheoryKind kind_ = TheoryKind::FreeMonoid;
  Letters mult_;
  Letters left_;
  Letters right_;
  std::int32_t ls_ = -1, lt_ = -1, rs_ = -1, rt_ = -1;
};

/// Two-hole embedding w(b1, b2), the composition map of a montage.
///   word-like   b1, b2 ↦ multiplier·left·b1·middle·b2·right, with b1 and
///               b2 exchanged when second_first is set
///   Commutative b1, b2 ↦ multiplier·b1·b2
///   FreeMagma   tree code containing kHole (b1) and kSecondHole (b2)
struct BiContext {
  TheoryKind kind = TheoryKind::FreeMonoid;
  Letters multiplier;
  Letters left, middle, right;
  Letters tree;
  bool second_first = false;

  friend bool operator==(const BiContext&, const BiContext&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace diamond

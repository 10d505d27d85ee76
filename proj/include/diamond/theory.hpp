#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamond/monomial.hpp"

namespace diamond {

struct Arrow {
  std::string name;
  std::int32_t source = 0;
  std::int32_t target = 0;
};

enum class OverlapClass {
  Overlap,    // the two leads share part of their material
  Inclusion,  // one lead divides the other
  Separated,  // Mixed only: disjoint words tied together by a shared central factor
  Montage,    // disjoint pieces; reported only on request
};

const char* to_string(OverlapClass c);

/// A minimal superposition of two leads: first(mu1) == superposition ==
/// second(mu2).
struct OverlapDatum {
  Monomial superposition;
  Context first;
  Context second;
  OverlapClass kind = OverlapClass::Overlap;
  /// For inclusions: 1 when mu1 is the contained (inner) monomial, 2 when
  /// mu2 is.
  int inner = 0;
  /// Composition map for montages.
  std::optional<BiContext> composition;
};

struct OverlapOptions {
  /// Also report montage superpositions (adjacent placements, coprime lcm).
  bool keep_montages = false;
  /// Mixed theory: separated configurations w1·g·w2 form an infinite family
  /// indexed by the gap word g; members up to this total degree are listed.
  int separated_max_degree = 0;
};

/// How an ambiguity at a given monomial relates to the minimal ones.
enum class PairShape {
  Critical,       // cannot be stripped, not a montage
  ProperShadow,   // image of a strictly smaller ambiguity under a context
  Montage,        // the two reductions act on disjoint pieces
};

struct LcmSuperposition {
  Monomial lcm;
  Context first;
  Context second;
};

/// One of the five monomial families together with its alphabet or quiver.
/// All operations validate that their monomials belong to this theory.
class Theory {
 public:
  static Theory free_monoid(std::vector<std::string> alphabet);
  static Theory commutative(std::vector<std::string> alphabet);
  static Theory mixed(std::vector<std::string> central,
                      std::vector<std::string> letters);
  static Theory free_magma(std::vector<std::string> alphabet);
  static Theory path(std::vector<std::string> vertices,
                     std::vector<Arrow> arrows);

  TheoryKind kind() const noexcept { return kind_; }

  /// Generators indexed as the order and weight vectors expect them:
  /// the alphabet; for Mixed the central letters first, then the word
  /// letters; for Path the arrows.
  std::size_t generator_count() const;
  const std::string& generator_name(std::size_t index) const;
  std::optional<std::size_t> find_generator(const std::string& name) const;

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& central_alphabet() const { return central_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;

  // Monomial construction -------------------------------------------------

  /// Unit monomial; absent in FreeMagma and Path.
  std::optional<Monomial> one() const;
  /// The generator with the given index as a monomial of degree 1.
  Monomial generator(std::size_t index) const;
  /// Length-0 path at a vertex (Path only).
  Monomial vertex(std::size_t index) const;
  /// Product of basis monomials; nullopt for a zero path product.
  std::optional<Monomial> multiply(const Monomial& a, const Monomial& b) const;

  int degree(const Monomial& m) const;
  /// Throws TheoryMismatch for monomials not belonging to this theory.
  void validate(const Monomial& m) const;
  void validate(const Context& c) const;

  // Contexts --------------------------------------------------------------

  /// The context fixing mu.
  Context identity(const Monomial& mu) const;
  /// v(mu), or nullopt (Path only) when the endpoints do not match.
  std::optional<Monomial> apply(const Context& v, const Monomial& mu) const;
  /// outer ∘ inner, or nullopt when the path pieces do not compose.
  std::optional<Context> compose(const Context& outer,
                                 const Context& inner) const;
  std::optional<Monomial> apply(const BiContext& w, const Monomial& first,
                                const Monomial& second) const;

  /// All contexts v with v(nu) == mu, in structural order. For Mixed
  /// monomials with an empty word part only the split (ε, word) is listed;
  /// such monomials are central.
  std::vector<Context> divisions(const Monomial& mu, const Monomial& nu) const;
  bool divides(const Monomial& nu, const Monomial& mu) const;

  /// Minimal superpositions of mu1 and mu2 (see OverlapClass). Montages are
  /// dropped unless requested.
  std::vector<OverlapDatum> overlaps(const Monomial& mu1, const Monomial& mu2,
                                     const OverlapOptions& options = {}) const;

  /// Commutative only.
  LcmSuperposition lcm_superposition(const Monomial& mu1,
                                     const Monomial& mu2) const;

  /// Path only: same source and same target.
  bool uniform_equivalent(const Monomial& mu, const Monomial& nu) const;

  /// Classifies the pair of embeddings v1(lead1) == mu == v2(lead2).
  PairShape classify(const Monomial& mu, const Context& v1,
                     const Monomial& lead1, const Context& v2,
                     const Monomial& lead2) const;

  /// Every monomial of the given degree, in structural order.
  std::vector<Monomial> monomials_of_degree(int degree) const;

  std::string format(const Monomial& m) const;
  std::string format(const Context& v) const;

 private:
  Theory() = default;

  void check(const Monomial& m) const;
  std::int32_t vertex_after(const Monomial& path, std::size_t steps) const;
  Context word_context(const Monomial& mu, std::size_t pos,
                       std::size_t len) const;
  Monomial with_letters(const Monomial& like, Letters exps,
                        Letters letters) const;
  std::string format_word(std::span<const std::int32_t> letters,
                          std::size_t offset) const;
  std::string format_tree(std::span<const std::int32_t> code,
                          std::size_t& pos) const;

  TheoryKind kind_ = TheoryKind::FreeMonoid;
  std::vector<std::string> alphabet_;  // word letters / commutative / leaves
  std::vector<std::string> central_;   // Mixed: commuting letters
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

}  // namespace diamond

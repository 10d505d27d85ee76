#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace diamond {

/// Coefficient field: the rationals (modulus 0) or Z/pZ for a prime p < 2^63.
class Field {
 public:
  constexpr Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws SystemError unless `p` is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field);

  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return from_int(field, 1); }
  static Scalar from_int(Field field, long value);
  /// `num/den` mapped into the field; den must be invertible.
  static Scalar from_rational(Field field, const mpz_class& num,
                              const mpz_class& den);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;
  /// True for rationals below zero; residues are never negative.
  bool is_negative() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace diamond

#include "diamond/scalar.hpp"

#include "diamond/errors.hpp"

namespace diamond {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// unsigned long is 64 bits on every supported target.
std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  return mpz_fdiv_ui(value.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 63) || !is_prime(p)) {
    throw SystemError("field modulus " + std::to_string(p) +
                      " is not a prime below 2^63");
  }
  Field f;
  f.modulus_ = p;
  return f;
}

Scalar::Scalar(Field field) : field_(field) {}

Scalar Scalar::from_int(Field field, long value) {
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = value;
  } else {
    s.r_ = reduce_mpz(mpz_class(value), field.modulus());
  }
  return s;
}

Scalar Scalar::from_rational(Field field, const mpz_class& num,
                             const mpz_class& den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Scalar s(field);
  if (field.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  std::uint64_t d = reduce_mpz(den, field.modulus());
  if (d == 0) {
    throw PreconditionError("denominator " + den.get_str() +
                            " is not invertible modulo " +
                            std::to_string(field.modulus()));
  }
  Scalar n = Scalar(field);
  n.r_ = reduce_mpz(num, field.modulus());
  Scalar dd = Scalar(field);
  dd.r_ = d;
  return n / dd;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

bool Scalar::is_negative() const { return field_.is_rational() && q_ < 0; }

void Scalar::check_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw TheoryMismatch("scalars from different coefficient fields");
  }
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    std::uint64_t p = field_.modulus();
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + rhs.r_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mul_mod(r_, rhs.r_, field_.modulus());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  Scalar s(field_);
  if (field_.is_rational()) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace diamond

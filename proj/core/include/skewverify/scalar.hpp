#pragma once

// Exact field elements: arbitrary-precision rationals or residues mod a prime.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace skewverify {

class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// Ground field descriptor. Characteristic 0 means Q; otherwise F_p.
class Field {
 public:
  constexpr Field() = default;

  static Field rational() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime below 2^32.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_fraction(long long num, long long den) const;
  /// Rationals as "p/q" or "n"; prime-field literals as (possibly negative) integers.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit constexpr Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of Q (kept in lowest terms, positive denominator) or of F_p
/// (kept in [0, p)). Default construction gives the rational zero.
///
/// Rationals whose numerator and denominator fit in an int64 are stored
/// inline and only spill to mpq_class when an operation overflows; the
/// representation is canonical, so equality is representational.
class Scalar {
 public:
  Scalar() : value_(Small{0, 1}) {}

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

  /// Only meaningful for rationals; used by tests.
  mpq_class rational_value() const;
  std::uint64_t residue() const;

 private:
  friend class Field;
  struct Small {
    std::int64_t num;
    std::int64_t den;
  };

  Scalar(Field f, std::uint64_t r) : field_(f), value_(r) {}
  Scalar(Field f, Small q) : field_(f), value_(q) {}
  /// Canonicalizes q and stores it inline when it fits.
  static Scalar rational(mpq_class q);

  void require_same_field(const Scalar& o) const;
  mpq_class to_mpq() const;

  Field field_;
  std::variant<Small, mpq_class, std::uint64_t> value_;
};

}  // namespace skewverify

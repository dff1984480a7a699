#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfkit::exactlin {

/*
 * Exact coefficient fields. Two kinds are supported:
 *   - the rationals, backed by GMP arbitrary-precision fractions,
 *   - prime fields F_p with residues in [0, p).
 * No floating point anywhere, so "is zero" and "is an isomorphism" are
 * decidable with zero tolerance.
 */
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime_field(std::uint64_t p);  // throws InputError if p is not prime

  bool is_rationals() const { return prime_ == 0; }
  std::uint64_t characteristic() const { return prime_; }
  std::string name() const;  // "Q" or "F<p>"

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

// One exact field element. Rationals are kept canonical (lowest terms,
// positive denominator, GMP invariant); F_p residues lie in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}

  static Scalar zero(const Field& f) { return from_integer(f, 0); }
  static Scalar one(const Field& f) { return from_integer(f, 1); }
  static Scalar from_integer(const Field& f, long v);
  static Scalar rational(mpq_class v);
  static Scalar residue(const Field& f, std::uint64_t v);
  // Accepts "a", "-a" and "a/b"; residues are reduced mod p.
  static Scalar from_string(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational_value() const { return q_; }
  std::uint64_t residue_value() const { return r_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;  // throws std::invalid_argument on zero

  // "num/den" for rationals (no "/1" on integers), decimal residue for F_p.
  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  mpq_class q_;          // used when field_.is_rationals()
  std::uint64_t r_ = 0;  // used for F_p
};

}  // namespace hopfkit::exactlin

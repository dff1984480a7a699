#include "hopfkit/field.hpp"

#include <stdexcept>

#include "hopfkit/errors.hpp"

namespace hopfkit::exactlin {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

// Extended Euclid; p prime, a != 0 mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (r != 1) throw std::invalid_argument("inv_mod: element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (p >= (1ull << 31))
    throw InputError("prime field characteristic too large (p < 2^31 required)");
  if (!is_prime(p))
    throw InputError("prime field characteristic must be prime, got " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_rationals() ? "Q" : "F" + std::to_string(prime_);
}

Scalar Scalar::from_integer(const Field& f, long v) {
  Scalar s(f);
  if (f.is_rationals()) {
    s.q_ = mpq_class(v);
  } else {
    std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = static_cast<std::int64_t>(v) % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(mpq_class v) {
  Scalar s(Field::rationals());
  v.canonicalize();
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t v) {
  if (f.is_rationals())
    throw std::invalid_argument("residue() requires a prime field");
  Scalar s(f);
  s.r_ = v % f.characteristic();
  return s;
}

Scalar Scalar::from_string(const Field& f, std::string_view text) {
  std::string t(text);
  if (t.empty()) throw InputError("empty scalar literal");
  if (f.is_rationals()) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
      throw InputError("bad rational literal '" + t + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
      throw InputError("zero denominator in '" + t + "'");
    q.canonicalize();
    return rational(q);
  }
  mpz_class z;
  if (mpz_set_str(z.get_mpz_t(), t.c_str(), 10) != 0)
    throw InputError("bad residue literal '" + t + "' for " + f.name());
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class r = z % p;
  if (r < 0) r += p;
  return residue(f, r.get_ui());
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) s.q_ = q_ + o.q_;
  else s.r_ = (r_ + o.r_) % field_.characteristic();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) s.q_ = q_ - o.q_;
  else {
    std::uint64_t p = field_.characteristic();
    s.r_ = (r_ + p - o.r_) % p;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.is_rationals()) s.q_ = q_ * o.q_;
  else s.r_ = mul_mod(r_, o.r_, field_.characteristic());
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rationals()) s.q_ = -q_;
  else s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("division by zero");
  Scalar s(field_);
  if (field_.is_rationals()) s.q_ = 1 / q_;
  else s.r_ = inv_mod(r_, field_.characteristic());
  return s;
}

std::string Scalar::str() const {
  return field_.is_rationals() ? q_.get_str() : std::to_string(r_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace hopfkit::exactlin

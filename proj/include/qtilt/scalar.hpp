#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtilt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ground field of a computation: the rationals, or F_p for a prime p.
///
/// The active field is a per-thread setting installed with FieldScope. All
/// Scalars taking part in one computation must be created under the same
/// field.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "Fp:<p>" or "Fp <p>".
  static Field parse(std::string_view text);

  bool is_prime() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string str() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

Field current_field();

class FieldScope {
 public:
  explicit FieldScope(Field f);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  Field saved_;
};

/// Exact field element.
///
/// Over Q the value is kept as a reduced fraction with positive denominator.
/// Small values live in two machine words; anything that overflows is
/// promoted to a GMP rational and demoted again as soon as it fits.
/// Over F_p the value is the residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v);  // NOLINT: integers convert implicitly
  Scalar(int v) : Scalar(static_cast<std::int64_t>(v)) {}  // NOLINT
  Scalar(std::int64_t num, std::int64_t den);

  Scalar(const Scalar& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Scalar& operator=(Scalar&&) noexcept = default;

  /// Parses "a", "-a" or "a/b" (decimal integers of any size).
  static Scalar parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  /// Small-integer view; only meaningful when fits_int64() holds.
  bool fits_int64() const { return !big_ && den_ == 1; }
  std::int64_t to_int64() const { return num_; }
  /// Numerator and denominator as GMP integers.
  mpz_class numerator() const;
  mpz_class denominator() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// a += b * c without a temporary on the fast path.
  void add_mul(const Scalar& b, const Scalar& c);

 private:
  void set_big(mpq_class v);
  void set_fraction(__int128 n, __int128 d);
  mpq_class as_mpq() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qtilt

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arrtop {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficient field of an exact scalar: the rationals or the Gaussian rationals.
enum class Field { Q, QI };

std::string_view field_name(Field f);
Field parse_field_name(std::string_view name);

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" into a canonical rational.  Throws ParseError.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// An exact element of Q or Q(i).
///
/// A Q scalar always has zero imaginary part.  Equality includes the field
/// tag, so Q(i) 1+0i and Q 1 are different values; mixing fields in
/// arithmetic throws std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Rational value) : re_(std::move(value)) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)), field_(Field::QI) {}

  static Scalar zero(Field f) { return f == Field::Q ? Scalar() : Scalar(0, 0); }
  static Scalar one(Field f) { return f == Field::Q ? Scalar(Rational(1)) : Scalar(1, 0); }
  static Scalar from_int(long v, Field f) {
    return f == Field::Q ? Scalar(Rational(v)) : Scalar(Rational(v), Rational(0));
  }

  /// Parses a rational ("-3/4") or, for Field::QI, a Gaussian rational
  /// ("1/2-3i", "i", "-2i", "5").
  static Scalar parse(std::string_view text, Field f);

  Field field() const { return field_; }
  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_integer() const { return sgn(im_) == 0 && re_.get_den() == 1; }

  Scalar conj() const;
  /// re^2 + im^2
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;
  /// Same value viewed in another field; only Q -> QI or real QI -> Q.
  Scalar in_field(Field f) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order used for canonical keys: field, then re, then im.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
  }

  Rational re_{0};
  Rational im_{0};
  Field field_ = Field::Q;
};

}  // namespace arrtop

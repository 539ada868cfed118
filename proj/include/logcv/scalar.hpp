#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "logcv/cyclotomic.hpp"
#include "logcv/errors.hpp"

namespace logcv {

using Integer = mpz_class;

/// a + b*sqrt(d) with d square-free, d >= 2 and b != 0.
struct QuadraticNumber {
  Rational a;
  Rational b;
  long d = 2;

  friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
};

/// Polynomial in t = 2cos(2*pi/s) reduced modulo Psi_s. The conductor is kept
/// normalized (never 2 mod 4) and the field has degree >= 3; smaller fields are
/// demoted to Rational or QuadraticNumber on construction.
struct CyclotomicReal {
  int s = 7;
  QPoly coeffs;

  friend bool operator==(const CyclotomicReal&, const CyclotomicReal&) = default;
};

enum class Tower { Rational, Quadratic, Cyclotomic };

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact real number in the tower Q | Q(sqrt d) | Q(2cos(2pi/s)).
///
/// Every constructor canonicalizes, so two Scalars in the same tower compare
/// equal iff they are structurally equal. Values are immutable and thread-safe.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long x) : v_(Rational(x)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int x) : v_(Rational(x)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational x);                  // NOLINT(google-explicit-constructor)
  Scalar(const Integer& x) : v_(Rational(x)) {}  // NOLINT(google-explicit-constructor)

  static Scalar quadratic(Rational a, Rational b, long d);
  static Scalar cyclotomic(int s, QPoly coeffs);

  /// sqrt(n) for an integer n >= 0, split into k*sqrt(d).
  static Scalar sqrt(const Integer& n);

  [[nodiscard]] Tower tower() const { return static_cast<Tower>(v_.index()); }
  [[nodiscard]] bool is_rational() const { return v_.index() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] const Rational& rational() const { return std::get<Rational>(v_); }
  [[nodiscard]] const QuadraticNumber& quadratic() const {
    return std::get<QuadraticNumber>(v_);
  }
  [[nodiscard]] const CyclotomicReal& cyclotomic() const {
    return std::get<CyclotomicReal>(v_);
  }

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] double approx() const;

  /// Textual encoding: "p/q" (or "p"), "a+b*sqrt(d)", "poly(t; c0,c1,...)@s".
  [[nodiscard]] std::string str() const;

  /// Parses the textual encoding and small expressions over it
  /// (+ - * / parentheses, decimals, sqrt(n), cos2pi(r,s)).
  static Scalar parse(std::string_view text);

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  using Repr = std::variant<Rational, QuadraticNumber, CyclotomicReal>;
  explicit Scalar(Repr v) : v_(std::move(v)) {}
  friend Scalar arith(const Scalar& x, const Scalar& y, ArithOp op);

  Repr v_;
};

Scalar arith(const Scalar& x, const Scalar& y, ArithOp op);

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// 2cos(2*pi*r/s) for s >= 3 and 1 <= r < s.
Scalar cos2pi(long r, long s);

/// Integer power by repeated squaring, e >= 0.
Scalar pow(const Scalar& x, unsigned e);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

std::string rational_str(const Rational& q);

}  // namespace logcv

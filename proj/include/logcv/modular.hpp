#pragma once

// Integers modulo a fixed prime below 2^63, used to generate and test very
// long sequences whose exact rational terms are too large to hold.

#include <cstdint>

#include <gmpxx.h>

#include "logcv/errors.hpp"

namespace logcv {

template <std::uint64_t P>
class Zp {
  static_assert(P > 2 && P < (std::uint64_t{1} << 63));

 public:
  static constexpr std::uint64_t modulus = P;

  Zp() = default;
  Zp(long x) : v_(reduce_signed(x)) {}  // NOLINT(google-explicit-constructor)
  Zp(int x) : v_(reduce_signed(x)) {}   // NOLINT(google-explicit-constructor)

  /// Image of a rational whose denominator is a unit mod P.
  explicit Zp(const mpq_class& q) {
    Zp num = from_mpz(q.get_num()), den = from_mpz(q.get_den());
    if (den.v_ == 0) throw DivisionByZero();
    *this = num / den;
  }

  static Zp from_mpz(const mpz_class& z) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return raw(mpz_fdiv_ui(z.get_mpz_t(), P));
  }

  [[nodiscard]] std::uint64_t value() const { return v_; }

  friend Zp operator+(Zp a, Zp b) {
    std::uint64_t s = a.v_ + b.v_;
    return raw(s >= P ? s - P : s);
  }
  friend Zp operator-(Zp a, Zp b) { return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + P - b.v_); }
  friend Zp operator-(Zp a) { return raw(a.v_ == 0 ? 0 : P - a.v_); }
  friend Zp operator*(Zp a, Zp b) {
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v_) * b.v_ % P));
  }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp& operator+=(Zp b) { return *this = *this + b; }
  Zp& operator-=(Zp b) { return *this = *this - b; }
  Zp& operator*=(Zp b) { return *this = *this * b; }
  Zp& operator/=(Zp b) { return *this = *this / b; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  [[nodiscard]] Zp inverse() const {
    if (v_ == 0) throw DivisionByZero();
    Zp acc = raw(1), base = *this;
    for (std::uint64_t e = P - 2; e; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

 private:
  static Zp raw(std::uint64_t v) {
    Zp x;
    x.v_ = v;
    return x;
  }
  static std::uint64_t reduce_signed(long x) {
    const auto p = static_cast<__int128>(P);
    __int128 r = static_cast<__int128>(x) % p;
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  }

  std::uint64_t v_ = 0;
};

template <std::uint64_t P>
bool is_zero(const Zp<P>& x) {
  return x.value() == 0;
}

/// Two Mersenne-ish primes; agreement under both makes accidental rank drops
/// vanishingly unlikely, though one prime already suffices for a proof.
inline constexpr std::uint64_t kPrime61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kPrime62 = (std::uint64_t{1} << 62) - 57;

using Z61 = Zp<kPrime61>;
using Z62 = Zp<kPrime62>;

}  // namespace logcv

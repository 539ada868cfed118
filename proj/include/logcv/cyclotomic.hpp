#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace logcv {

using Rational = mpq_class;
using QPoly = std::vector<Rational>;

/// The n-th cyclotomic polynomial, by exact division of x^n - 1.
QPoly cyclotomic_poly(int n);

/// Monic minimal polynomial of 2cos(2*pi/s), s >= 3.
QPoly min_poly_2cos(int s);

/// Euler's totient.
int euler_phi(int n);

/// Smallest conductor generating the same real subfield: s/2 when s = 2 mod 4.
int normalize_conductor(int s);

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Arithmetic in Q(2cos(2*pi/s)) with elements as polynomials in t = 2cos(2*pi/s)
/// of degree < deg(Psi_s). Instances are shared and immutable apart from the
/// cached enclosure of t, which only ever narrows.
class RealCyclotomicField {
 public:
  explicit RealCyclotomicField(int s);

  [[nodiscard]] int conductor() const { return s_; }
  [[nodiscard]] int degree() const { return static_cast<int>(psi_.size()) - 1; }
  [[nodiscard]] const QPoly& min_poly() const { return psi_; }

  [[nodiscard]] QPoly reduce(const QPoly& p) const;
  [[nodiscard]] QPoly mul(const QPoly& a, const QPoly& b) const;
  [[nodiscard]] QPoly inverse(const QPoly& a) const;

  /// 2cos(2*pi*k/s) = D_k(t), with D the Dickson polynomials D_0 = 2, D_1 = t.
  [[nodiscard]] QPoly dickson(long k) const;

  /// Evaluates p at the field element x (composition), reduced.
  [[nodiscard]] QPoly compose(const QPoly& p, const QPoly& x) const;

  /// Rational interval containing t with width at most 2^-bits.
  [[nodiscard]] Interval enclosure(long bits) const;

  /// Exact sign of a nonzero element; precision starts at 64 bits and doubles.
  [[nodiscard]] int sign(const QPoly& a) const;

 private:
  int s_;
  QPoly psi_;
  mutable std::mutex mu_;
  mutable Interval enc_;
  mutable long enc_bits_ = 0;
};

/// Shared field for conductor s (s >= 3); thread-safe.
const RealCyclotomicField& real_cyclotomic_field(int s);

/// Conductor of Q(sqrt(d)) for square-free d >= 2 (d or 4d).
int sqrt_conductor(long d);

/// sqrt(d) as an element of the conductor-s field when it lies there and can be
/// built from per-prime Gauss sums; nullopt otherwise.
std::optional<QPoly> sqrt_in_field(long d, int s);

/// Upper cap on interval refinement precision (env LOGCV_MAX_BITS, default 16384).
long max_refinement_bits();

}  // namespace logcv

#pragma once

// Truncated Laurent series in a formal infinitesimal eps over a field T.
// Each value carries its own absolute precision: the series is known modulo
// eps^prec. Used to push a degenerate linear solve through a limit eps -> 0.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "logcv/errors.hpp"

namespace logcv {

template <class T>
class Laurent {
 public:
  /// Absolute precision given to constants; set by LaurentPrecision.
  static inline thread_local long working_precision = 8;

  Laurent() : Laurent(T(0)) {}
  Laurent(long x) : Laurent(T(x)) {}  // NOLINT(google-explicit-constructor)
  Laurent(int x) : Laurent(T(x)) {}   // NOLINT(google-explicit-constructor)
  explicit Laurent(T x) : val_(0), prec_(working_precision) {
    if (prec_ > 0) c_.push_back(std::move(x));
    normalize();
  }

  static Laurent eps() {
    Laurent e(T(0));
    e.val_ = 1;
    e.c_.assign(static_cast<std::size_t>(std::max(0L, e.prec_ - 1)), T(0));
    if (!e.c_.empty()) e.c_[0] = T(1);
    return e;
  }

  /// Lowest exponent with a known nonzero coefficient, or prec() when the
  /// value is zero to the known precision.
  [[nodiscard]] long valuation() const { return val_; }
  [[nodiscard]] long prec() const { return prec_; }

  /// Coefficient of eps^k for k < prec().
  [[nodiscard]] T coeff(long k) const {
    if (k >= prec_) throw DomainError("coefficient beyond known precision");
    if (k < val_) return T(0);
    return c_[static_cast<std::size_t>(k - val_)];
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r = empty(a.val_ + b.val_, std::min(a.val_ + b.prec_, b.val_ + a.prec_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < r.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }

  friend Laurent operator/(const Laurent& a, const Laurent& b) { return a * b.inverse(); }

  /// Equality up to the coarser precision.
  friend bool operator==(const Laurent& a, const Laurent& b) { return is_zero(a - b); }

  friend bool is_zero(const Laurent& x) { return x.c_.empty(); }

  [[nodiscard]] Laurent inverse() const {
    if (c_.empty()) throw DivisionByZero();
    // u = c_0 (1 + w), 1/u = c_0^-1 (1 - w + w^2 - ...), relative precision kept
    const long rel = prec_ - val_;
    Laurent r = empty(-val_, -val_ + rel);
    if (r.c_.empty()) return r;
    const T inv0 = T(1) / c_[0];
    r.c_[0] = inv0;
    for (long k = 1; k < static_cast<long>(r.c_.size()); ++k) {
      T acc(0);
      for (long j = 1; j <= k && j < static_cast<long>(c_.size()); ++j)
        acc = acc + c_[static_cast<std::size_t>(j)] * r.c_[static_cast<std::size_t>(k - j)];
      r.c_[static_cast<std::size_t>(k)] = T(0) - acc * inv0;
    }
    r.normalize();
    return r;
  }

 private:
  static Laurent empty(long val, long prec) {
    Laurent r(T(0));
    r.val_ = val;
    r.prec_ = std::min(prec, working_precision);
    r.c_.assign(static_cast<std::size_t>(std::max(0L, r.prec_ - val)), T(0));
    return r;
  }

  static Laurent combine(const Laurent& a, const Laurent& b, bool subtract) {
    const long val = std::min(a.val_, b.val_);
    Laurent r = empty(val, std::min(a.prec_, b.prec_));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      const long k = val + static_cast<long>(i);
      T x = k >= a.val_ && k - a.val_ < static_cast<long>(a.c_.size())
                ? a.c_[static_cast<std::size_t>(k - a.val_)]
                : T(0);
      if (k >= b.val_ && k - b.val_ < static_cast<long>(b.c_.size())) {
        const T& y = b.c_[static_cast<std::size_t>(k - b.val_)];
        x = subtract ? x - y : x + y;
      }
      r.c_[i] = std::move(x);
    }
    r.normalize();
    return r;
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && is_zero(c_[lead])) ++lead;
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ = c_.empty() ? prec_ : val_ + static_cast<long>(lead);
  }

  long val_;
  long prec_;
  std::vector<T> c_;  // coefficients of eps^val .. eps^(prec-1)
};

/// Scoped working precision for Laurent<T> constants.
template <class T>
class LaurentPrecision {
 public:
  explicit LaurentPrecision(long prec) : saved_(Laurent<T>::working_precision) {
    Laurent<T>::working_precision = prec;
  }
  ~LaurentPrecision() { Laurent<T>::working_precision = saved_; }
  LaurentPrecision(const LaurentPrecision&) = delete;
  LaurentPrecision& operator=(const LaurentPrecision&) = delete;

 private:
  long saved_;
};

}  // namespace logcv

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "logcv/scalar.hpp"

namespace logcv {

/// How entries past the end are read. A polynomial has a_{d+1} = 0; a prefix of
/// an infinite sequence has an unknown a_{d+1}, so L shortens it by one.
/// Both kinds read a_{-1} = 0.
enum class SeqKind { FinitePolynomial, PrefixOfInfinite };

class Sequence {
 public:
  explicit Sequence(std::vector<Scalar> entries, SeqKind kind = SeqKind::FinitePolynomial);

  /// Comma-separated Scalar strings; commas nested in parentheses are kept.
  static Sequence parse_csv(std::string_view text, SeqKind kind = SeqKind::FinitePolynomial);

  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] std::size_t degree() const { return entries_.size() - 1; }
  [[nodiscard]] SeqKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<Scalar>& entries() const& { return entries_; }
  // moved out of temporaries so `for (x : f().entries())` does not dangle
  [[nodiscard]] std::vector<Scalar> entries() && { return std::move(entries_); }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return entries_[i]; }

  /// a_i with the boundary convention; i may be -1 or d+1 (the latter only for polynomials).
  [[nodiscard]] Scalar at(long i) const;

  /// Same entries, reinterpreted under the other boundary convention.
  [[nodiscard]] Sequence as(SeqKind kind) const { return Sequence(entries_, kind); }

  [[nodiscard]] bool all_positive() const;
  [[nodiscard]] bool all_integer() const;

  friend bool operator==(const Sequence& x, const Sequence& y);

 private:
  std::vector<Scalar> entries_;
  SeqKind kind_;
};

/// Outcome of bounded m-log-concavity testing.
///
/// depth is the largest j <= max_m with L^0..L^j nonnegative (-1 when the input
/// itself has a negative entry). When a negative entry ends the search, the
/// witness names the first negative entry of L^(depth+1). saturated means every
/// level up to max_m passed, so nothing is claimed past it.
struct DepthResult {
  int depth = 0;
  bool saturated = false;
  std::optional<std::size_t> witness_index;
  std::optional<Scalar> witness_value;
};

/// Entry n becomes a_n^2 - a_{n-1} a_{n+1}.
Sequence l_operator(const Sequence& seq);

Sequence l_iterate(const Sequence& seq, int m);

DepthResult log_concavity_depth(const Sequence& seq, int max_m);

/// min over internal n of a_n^2 / (a_{n-1} a_{n+1}); nullopt stands for +infinity
/// (fewer than three entries). Throws NonPositiveEntry unless every entry is > 0.
std::optional<Scalar> r_factor_supremum(const Sequence& seq);

/// Literal test of a_n^2 >= r a_{n-1} a_{n+1} (or > when strict) at every internal n.
bool is_r_factor(const Sequence& seq, const Scalar& r, bool strict = false);

bool is_palindromic(const Sequence& seq);

bool has_internal_zeros(const Sequence& seq);

/// Entrywise c * seq.
Sequence scale(const Sequence& seq, const Scalar& c);

/// Nonzero lambda with rhs = lambda * lhs entrywise, when one exists.
std::optional<Scalar> proportionality(const Sequence& lhs, const Sequence& rhs);

}  // namespace logcv

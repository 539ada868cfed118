#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcv/sequence.hpp"

namespace logcv {

enum class CertKind { NotMLogConcave, FixedPoint, RFactor, Unknown };

std::string to_string(CertKind kind);

/// One row per iterate L^m examined.
struct TraceEntry {
  int m = 0;
  int min_sign = 1;              // sign of the smallest entry
  bool r_infinite = false;       // fewer than three entries
  std::optional<Scalar> r_sup;   // set when all entries are positive and r_infinite is false
};

/// Outcome of the iterate-until-decided procedure. Fields beyond kind and m
/// are filled according to kind:
///   NotMLogConcave  witness_index, witness_value: first negative entry of L^m
///   FixedPoint      lambda, base: L^m(a) = lambda L^base(a); base = 0 is the
///                   classical case L^m(a) = lambda a, base > 0 a later cycle
///   RFactor         r (or r_infinite): r_factor_supremum(L^m(a))
///   Unknown         m = last iterate examined; budget_exhausted when the
///                   entry-size cap stopped the search before max_iter
struct Certificate {
  CertKind kind = CertKind::Unknown;
  int m = 0;
  std::optional<std::size_t> witness_index;
  std::optional<Scalar> witness_value;
  std::optional<Scalar> lambda;
  int base = 0;
  std::optional<Scalar> r;
  bool r_infinite = false;
  bool budget_exhausted = false;
  std::vector<TraceEntry> trace;

  /// True for the kinds that prove infinite log-concavity.
  [[nodiscard]] bool proves_infinite() const {
    return kind == CertKind::FixedPoint || kind == CertKind::RFactor;
  }
};

/// (3 + sqrt(5 + 4s)) / 2, the least r with L(M_r) inside M_{r+s}.
Scalar cc_threshold(Rational s);

/// Computes L^m(a) for m = 0, 1, ... up to max_iter and stops at the first
/// iterate that has a negative entry, is a positive multiple of an earlier
/// iterate, or is r-factor log-concave for r >= (3 + sqrt 5)/2. The checks
/// run in that order on each iterate. Entries roughly square at every step, so
/// max_bits (0 = no cap) bounds the size of rational entries before the next
/// L is taken. Throws NonPositiveInput.
Certificate certify_infinite(const Sequence& seq, int max_iter = 100, std::size_t max_bits = 0);

/// Re-derives the claim of a certificate from the sequence it was issued for.
bool validate(const Certificate& cert, const Sequence& seq);

/// 4-factor log-concavity: the polynomial has only real roots.
bool kurtz_certificate(const Sequence& seq);

/// Strict r0-factor log-concavity, r0 the real root of r^3 - r^2 - 1, for
/// degree > 5: every root has negative real part.
bool hurwitz_certificate(const Sequence& seq);

}  // namespace logcv

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "logcv/sequence.hpp"

namespace logcv {

/// slope * x + intercept in a single unknown x.
template <class T>
struct AffineForm {
  T slope{0};
  T intercept{0};

  static AffineForm constant(T c) { return {T(0), std::move(c)}; }
  static AffineForm unknown() { return {T(1), T(0)}; }
  [[nodiscard]] bool is_constant() const { return is_zero(slope); }

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
    return {a.slope + b.slope, a.intercept + b.intercept};
  }
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b) {
    return {a.slope - b.slope, a.intercept - b.intercept};
  }
  friend AffineForm operator*(const AffineForm& a, const AffineForm& b) {
    if (a.is_constant()) return {a.intercept * b.slope, a.intercept * b.intercept};
    if (b.is_constant()) return {a.slope * b.intercept, a.intercept * b.intercept};
    // The L-window recursion never multiplies two forms that both carry the
    // unknown; reaching this means the solver's window bookkeeping is wrong.
    throw std::logic_error("product of two non-constant affine forms");
  }
};

/// Solves L^m(a)_n = a_n for the next term, where n = a.size() - m: treats
/// a_{n+m} as the unknown x, evaluates L^m(a)_n on the window a_{n-m}..a_{n+m}
/// with x affine, and solves. Works over any field T (Scalar for exact values,
/// Zp for modular images). Needs a.size() >= m + 1.
template <class T>
T next_fixed_lm_term(const std::vector<T>& a, int m) {
  using Form = AffineForm<T>;
  const long top = static_cast<long>(a.size());  // index of the unknown
  const long n = top - m;                         // equation L^m(a)_n = a_n
  long lo = std::max(0L, n - m);
  std::vector<Form> cur, next;
  for (long i = lo; i < top; ++i) cur.push_back(Form::constant(a[static_cast<std::size_t>(i)]));
  cur.push_back(Form::unknown());
  for (int j = 1; j <= m; ++j) {
    const long new_lo = std::max(0L, n - (m - j));
    next.clear();
    for (long i = new_lo; i <= top - j; ++i) {
      const auto at = [&](long k) -> const Form& { return cur[static_cast<std::size_t>(k - lo)]; };
      Form v = at(i) * at(i);
      if (i >= 1) v = v - at(i - 1) * at(i + 1);
      next.push_back(std::move(v));
    }
    std::swap(cur, next);
    lo = new_lo;
  }
  const Form& f = cur[static_cast<std::size_t>(n - lo)];
  if (f.is_constant())
    throw SingularStep(static_cast<std::size_t>(top),
                       "a_" + std::to_string(top) + " is not determined: slope is zero");
  return (a[static_cast<std::size_t>(n)] - f.intercept) / f.slope;
}

/// Extends a prefix a_0..a_m with a_0 = 1 so that L^m(a)_n = a_n for every
/// n >= 1 the computed terms reach. The n = 0 equation then holds automatically.
template <class T>
std::vector<T> extend_fixed_lm_values(std::vector<T> a, int m, std::size_t n_terms) {
  if (m < 1) throw DomainError("extend_fixed_lm needs m >= 1");
  if (a.size() != static_cast<std::size_t>(m) + 1)
    throw DomainError("extend_fixed_lm needs a prefix of length m+1");
  if (!(a[0] == T(1))) throw DomainError("extend_fixed_lm needs a_0 = 1");
  for (const auto& x : a)
    if (is_zero(x)) throw DomainError("extend_fixed_lm needs nonzero prefix entries");
  a.reserve(n_terms);
  while (a.size() < n_terms) a.push_back(next_fixed_lm_term(a, m));
  return a;
}

/// a_n = k(a_{n-1} - a_{n-2}) + a_{n-3}, a_0 = 1, zero pre-history.
Sequence fix_l(const Scalar& k, std::size_t n_terms);

/// a_n = beta a_{n-1} - (beta^2 - gamma) a_{n-2} + a_{n-3}, a_0 = 1, zero pre-history.
Sequence fix_l2(const Scalar& beta, const Scalar& gamma, std::size_t n_terms);

/// Exact extension of an L^m-fixed prefix (see extend_fixed_lm_values).
Sequence extend_fixed_lm(const Sequence& prefix, int m, std::size_t n_terms);

/// True iff L^m(seq) = lambda * seq on the indices L^m can reach.
bool verify_fixed(const Sequence& seq, int m, const Scalar& lambda);

/// For L(a) = lambda a, the rescaled a / lambda is fixed by L.
Sequence normalize_eigen(const Sequence& seq, const Scalar& lambda);

/// Coefficients of p_{s,r}(x) = (1 - x^s) / ((1 - x)(1 - 2cos(2 pi r/s) x + x^2)).
Sequence p_sr(long s, long r);

/// Least r with p_{s,1} r-factor log-concave: 1/cos(2pi/s) for even s,
/// 1/(1 - 2cos(pi/s))^2 for odd s; nullopt (+infinity) for s = 3, 4.
std::optional<Scalar> p_s_threshold(long s);

/// Parameters of a family of L^m-fixed sequences.
struct FixedFamily {
  struct ByK {
    Scalar k;
  };
  struct ByBetaGamma {
    Scalar beta, gamma;
  };
  struct ByPrefix {
    Sequence prefix;
  };
  int m = 1;
  std::variant<ByK, ByBetaGamma, ByPrefix> params;
};

Sequence generate(const FixedFamily& family, std::size_t n_terms);

/// Integer prefixes (1, a_1, ..., a_m) with 1 <= a_i <= bound whose L^m-fixed
/// extension stays integral and positive for n_terms terms and that are not
/// already fixed by a lower power L^j, j < m, on those terms. Exploratory only:
/// a hit says nothing about the terms past n_terms.
std::vector<std::vector<long>> search_integer_fixed(int m, long bound, std::size_t n_terms);

}  // namespace logcv

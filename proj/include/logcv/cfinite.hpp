#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <optional>
#include <vector>

#include "logcv/poly.hpp"
#include "logcv/sequence.hpp"

namespace logcv {

using SPoly = std::vector<Scalar>;  // low-to-high coefficients

/// a_n = rec[0] a_{n-1} + ... + rec[r-1] a_{n-r} for n >= r, with a_0..a_{r-1} given.
class CFiniteSeq {
 public:
  CFiniteSeq(std::vector<Scalar> rec, std::vector<Scalar> initials);

  /// Sequence annihilated by a monic characteristic polynomial, from its first deg(p) terms.
  static CFiniteSeq from_charpoly(const SPoly& charpoly, std::vector<Scalar> initials);

  static CFiniteSeq fix_l(const Scalar& k);
  static CFiniteSeq fix_l2(const Scalar& beta, const Scalar& gamma);

  [[nodiscard]] std::size_t order() const { return rec_.size(); }
  [[nodiscard]] const std::vector<Scalar>& rec() const { return rec_; }
  [[nodiscard]] const std::vector<Scalar>& initials() const { return init_; }

  /// x^r - c_1 x^{r-1} - ... - c_r, low-to-high.
  [[nodiscard]] SPoly charpoly() const;

  [[nodiscard]] Scalar term(std::size_t n) const;
  [[nodiscard]] std::vector<Scalar> terms(std::size_t count) const;

  /// (a_{n+1})_n
  [[nodiscard]] CFiniteSeq shift() const;

  friend CFiniteSeq operator+(const CFiniteSeq& a, const CFiniteSeq& b);
  /// Termwise (Hadamard) product.
  friend CFiniteSeq operator*(const CFiniteSeq& a, const CFiniteSeq& b);

 private:
  std::vector<Scalar> rec_;
  std::vector<Scalar> init_;
};

/// Power sums P_1..P_count of the roots of a monic polynomial (Newton's identities).
template <class T>
std::vector<T> power_sums(const std::vector<T>& monic, std::size_t count) {
  const std::size_t d = monic.size() - 1;
  // e[i] is the coefficient of x^{d-i}
  auto e = [&](std::size_t i) -> const T& { return monic[d - i]; };
  std::vector<T> p(count + 1, T(0));
  for (std::size_t k = 1; k <= count; ++k) {
    T acc = k <= d ? T(static_cast<long>(k)) * e(k) : T(0);
    for (std::size_t i = 1; i < k && i <= d; ++i) acc = acc + e(i) * p[k - i];
    p[k] = T(0) - acc;
  }
  return p;
}

/// Monic polynomial of degree n with the given power sums P_1..P_n (index 0 unused).
template <class T>
std::vector<T> from_power_sums(const std::vector<T>& p, std::size_t n) {
  std::vector<T> e(n + 1, T(0));  // e[i]: coefficient of x^{n-i}
  e[0] = T(1);
  for (std::size_t k = 1; k <= n; ++k) {
    T acc = p[k];
    for (std::size_t i = 1; i < k; ++i) acc = acc + e[i] * p[k - i];
    e[k] = T(0) - acc / T(static_cast<long>(k));
  }
  std::vector<T> out(n + 1, T(0));
  for (std::size_t i = 0; i <= n; ++i) out[n - i] = e[i];
  return out;
}

/// Monic polynomial whose roots are the pairwise products of the roots of p
/// and q: the characteristic polynomial of the Kronecker product of their
/// companion matrices, assembled from power sums P_k(pq) = P_k(p) P_k(q).
template <class T>
std::vector<T> product_annihilator_t(const std::vector<T>& p, const std::vector<T>& q) {
  if (p.size() < 2 || q.size() < 2 || !(p.back() == T(1)) || !(q.back() == T(1)))
    throw DomainError("product_annihilator needs monic polynomials of degree >= 1");
  const std::size_t n = (p.size() - 1) * (q.size() - 1);
  auto sp = power_sums(p, n), sq = power_sums(q, n);
  std::vector<T> s(n + 1, T(0));
  for (std::size_t k = 1; k <= n; ++k) s[k] = sp[k] * sq[k];
  return from_power_sums(s, n);
}

SPoly product_annihilator(const SPoly& p, const SPoly& q);

/// Outcome of the C-finite ansatz for L^m(a) = a.
struct LfixProof {
  bool holds = false;
  SPoly annihilator;  // annihilates b_n = L^m(a)_n - a_n for n >= m
  std::size_t checked = 0;  // b_0 .. b_{checked-1} evaluated
  std::optional<std::size_t> first_nonzero;
};

/// Proves or refutes L^m(a)_n = a_n for all n. b_n is a polynomial in shifts of
/// a once n >= m, so it is annihilated by Q_m * charpoly(a), where
/// Q_1 = prod(charpoly, charpoly) and Q_{i+1} = prod(Q_i, Q_i). Vanishing at
/// n = 0 .. m + deg - 1 then settles every n. OrderOverflow past max_order.
LfixProof prove_lfix(const CFiniteSeq& seq, int m, std::size_t max_order = 200);

inline bool prove_lfix_identity(const CFiniteSeq& seq, int m, std::size_t max_order = 200) {
  return prove_lfix(seq, m, max_order).holds;
}

/// sum_{i=0}^{order} p_i(n) a_{n-i} = 0 for every n >= order covered by the
/// terms; coeffs[i][j] is the coefficient of n^j in p_i.
struct RecurrenceAnsatz {
  int order = 0;
  int coeff_degree = 0;
  std::vector<std::vector<Scalar>> coeffs;
};

bool annihilates(const RecurrenceAnsatz& rec, const std::vector<Scalar>& terms);

/// Rows n = order..N-1 of the ansatz system, columns (i, j) -> n^j a_{n-i}.
template <class T>
std::vector<std::vector<T>> ansatz_matrix(const std::vector<T>& terms, int order, int degree) {
  std::vector<std::vector<T>> rows;
  for (std::size_t n = static_cast<std::size_t>(order); n < terms.size(); ++n) {
    std::vector<T> row;
    row.reserve(static_cast<std::size_t>((order + 1) * (degree + 1)));
    for (int i = 0; i <= order; ++i) {
      T power(1);
      for (int j = 0; j <= degree; ++j) {
        row.push_back(power * terms[n - static_cast<std::size_t>(i)]);
        power = power * T(static_cast<long>(n));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// A nonzero kernel vector of the matrix, or nullopt when it has full column rank.
template <class T>
std::optional<std::vector<T>> kernel_vector(std::vector<std::vector<T>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t pick = row;
    while (pick < m.size() && is_zero(m[pick][c])) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const T inv = T(1) / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] = m[row][k] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][c])) continue;
      const T f = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] - f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() == cols) return std::nullopt;
  std::size_t free = 0;
  for (std::size_t k = 0; k < pivot_col.size() && pivot_col[k] == free; ++k) ++free;
  std::vector<T> x(cols, T(0));
  x[free] = T(1);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = T(0) - m[r][free];
  return x;
}

/// Terms a guesser needs before it may try order r: 2r + margin for constant
/// coefficients, (r + 1)(degree + 1) + margin otherwise, and in every case more
/// equations than unknowns.
inline std::size_t required_terms(int r, int degree, int margin) {
  const int ansatz = degree == 0 ? 2 * r + margin : (r + 1) * (degree + 1) + margin;
  const int square = (r + 1) * (degree + 1) + r + 1;
  return static_cast<std::size_t>(std::max(ansatz, square));
}

/// Smallest order in 1..max_order with a nonzero ansatz solution, and that
/// solution. The term requirement is checked per order, so an early hit needs
/// fewer terms than a "none" over the whole range.
template <class T>
std::optional<std::pair<int, std::vector<T>>> find_ansatz(const std::vector<T>& terms,
                                                         int max_order, int degree,
                                                         int margin = 5) {
  for (int r = 1; r <= max_order; ++r) {
    const std::size_t cols = static_cast<std::size_t>((r + 1) * (degree + 1));
    const std::size_t need = required_terms(r, degree, margin);
    if (terms.size() < need)
      throw InsufficientTerms("order " + std::to_string(r) + ", degree " +
                              std::to_string(degree) + " needs " + std::to_string(need) +
                              " terms, got " + std::to_string(terms.size()));
    if (auto x = kernel_vector(ansatz_matrix(terms, r, degree), cols)) return {{r, std::move(*x)}};
  }
  return std::nullopt;
}

/// Constant-coefficient recurrence of least order <= max_order, or nullopt.
/// Trying order r needs 2r + margin terms; InsufficientTerms otherwise.
std::optional<RecurrenceAnsatz> guess_constant_rec(const std::vector<Scalar>& terms,
                                                   int max_order, int margin = 5);

/// Recurrence with polynomial coefficients of degree <= coeff_degree.
/// Trying order r needs (r + 1)(coeff_degree + 1) + margin terms.
std::optional<RecurrenceAnsatz> guess_polyrec(const std::vector<Scalar>& terms, int max_order,
                                              int coeff_degree, int margin = 5);

/// Certifies over Q that no recurrence of order <= max_order with coefficient
/// degree <= degree exists, from modular images of the terms: full column rank
/// of the reduced ansatz matrix forces full rank of the rational one. A false
/// return is inconclusive (the rank may only drop mod p).
template <class Z>
bool certify_no_recurrence_mod(const std::vector<Z>& terms, int max_order, int degree,
                               int margin = 5) {
  return !find_ansatz(terms, max_order, degree, margin).has_value();
}

}  // namespace logcv

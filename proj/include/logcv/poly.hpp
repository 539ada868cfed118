#pragma once

// Dense univariate polynomials stored low-to-high as std::vector<T>.
// T must be a field type with is_zero(const T&) found by ADL or overload.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "logcv/errors.hpp"

namespace logcv {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }

template <class T>
void poly_trim(std::vector<T>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

/// Degree of p, or -1 for the zero polynomial. Assumes p is trimmed.
template <class T>
long poly_degree(const std::vector<T>& p) {
  return static_cast<long>(p.size()) - 1;
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  poly_trim(r);
  return r;
}

template <class T>
std::vector<T> poly_sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  poly_trim(r);
  return r;
}

template <class T>
std::vector<T> poly_scale(const std::vector<T>& a, const T& c) {
  std::vector<T> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  poly_trim(r);
  return r;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

/// Quotient and remainder of a by a nonzero b.
template <class T>
std::pair<std::vector<T>, std::vector<T>> poly_divmod(std::vector<T> a,
                                                      const std::vector<T>& b) {
  if (b.empty()) throw DivisionByZero();
  poly_trim(a);
  if (a.size() < b.size()) return {{}, std::move(a)};
  std::vector<T> q(a.size() - b.size() + 1, T(0));
  const T& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (is_zero(a[k])) continue;
    T c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = a[shift + j] - c * b[j];
  }
  a.resize(b.size() - 1);
  poly_trim(a);
  poly_trim(q);
  return {std::move(q), std::move(a)};
}

template <class T>
std::vector<T> poly_mod(const std::vector<T>& a, const std::vector<T>& b) {
  return poly_divmod(a, b).second;
}

template <class T>
T poly_eval(const std::vector<T>& p, const T& x) {
  T acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Inverse of a modulo an irreducible m via the extended Euclidean algorithm.
template <class T>
std::vector<T> poly_inverse_mod(const std::vector<T>& a, const std::vector<T>& m) {
  std::vector<T> r0 = m, r1 = poly_mod(a, m);
  std::vector<T> s0, s1{T(1)};
  if (r1.empty()) throw DivisionByZero();
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    auto s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw DivisionByZero();  // a shares a factor with m
  }
  return poly_mod(poly_scale(s1, T(T(1) / r1[0])), m);
}

}  // namespace logcv

#include <random>

#include "doctest.h"
#include "logcv/cfinite.hpp"
#include "logcv/fixedpoint.hpp"
#include "logcv/modular.hpp"

using namespace logcv;

namespace {

SPoly spoly(std::initializer_list<long> c) {
  SPoly p;
  for (long x : c) p.emplace_back(x);
  return p;
}

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  return Scalar(Rational(num(rng), den(rng)));
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix companion(const QPoly& p) {
  const std::size_t d = p.size() - 1;
  Matrix c(d, std::vector<Rational>(d, 0));
  for (std::size_t i = 1; i < d; ++i) c[i][i - 1] = 1;
  for (std::size_t i = 0; i < d; ++i) c[i][d - 1] = -p[i];
  return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), m = b.size();
  Matrix k(n * m, std::vector<Rational>(n * m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) k[i * m + r][j * m + s] = a[i][j] * b[r][s];
  return k;
}

Rational det(Matrix a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// det(xI - M) by evaluation at n+1 integer points and Lagrange interpolation.
QPoly charpoly_by_interpolation(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix t = m;
    for (auto& row : t)
      for (auto& v : row) v = -v;
    for (std::size_t j = 0; j < n; ++j) t[j][j] += static_cast<long>(i);
    xs.emplace_back(static_cast<long>(i));
    ys.push_back(det(t));
  }
  QPoly out;
  for (std::size_t i = 0; i <= n; ++i) {
    QPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = poly_mul(basis, QPoly{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    out = poly_add(out, poly_scale(basis, Rational(ys[i] / denom)));
  }
  return out;
}

QPoly to_qpoly(const SPoly& p) {
  QPoly q;
  for (const auto& c : p) q.push_back(c.rational());
  return q;
}

}  // namespace

TEST_CASE("term extraction") {
  CFiniteSeq fib({1, 1}, {1, 1});
  CHECK(fib.term(6) == 13);
  CHECK(CFiniteSeq({4, -4, 1}, {1, 4, 12}).term(7) == 1596);
  CHECK(CFiniteSeq({2, -1, 1}, {1, 2, 3}).term(10) == 265);
  CHECK(CFiniteSeq::fix_l(4).terms(8) == fix_l(4, 8).entries());
  CHECK(CFiniteSeq::fix_l2(2, 3).terms(11) == fix_l2(2, 3, 11).entries());
  CHECK_THROWS_AS(CFiniteSeq({1, 1}, {1}), DomainError);
}

TEST_CASE("product annihilator examples") {
  CHECK(product_annihilator(spoly({-2, 1}), spoly({-2, 1})) == spoly({-4, 1}));
  CHECK(product_annihilator(spoly({-1, -1, 1}), spoly({-1, 1})) == spoly({-1, -1, 1}));
  SPoly k4 = spoly({-1, 4, -4, 1});
  SPoly prod = product_annihilator(k4, k4);
  REQUIRE(prod.size() == 10);
  CHECK(to_qpoly(prod) == charpoly_by_interpolation(kron(companion(to_qpoly(k4)), companion(to_qpoly(k4)))));
  // it kills a_n^2 and a_{n-1} a_{n+1} termwise
  auto a = CFiniteSeq::fix_l(4).terms(45);
  for (std::size_t n = 0; n < 30; ++n) {
    Scalar sq(0), cross(0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
      sq += prod[i] * a[n + i] * a[n + i];
      cross += prod[i] * a[n + i] * a[n + i + 2];
    }
    CHECK(sq.is_zero());
    CHECK(cross.is_zero());
  }
}

TEST_CASE("product annihilator agrees with the Kronecker oracle on random polynomials") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    const int dp = 1 + trial % 3, dq = 1 + (trial / 3) % 3;
    SPoly p, q;
    for (int i = 0; i < dp; ++i) p.push_back(random_rational(rng));
    for (int i = 0; i < dq; ++i) q.push_back(random_rational(rng));
    p.emplace_back(1);
    q.emplace_back(1);
    CHECK(to_qpoly(product_annihilator(p, q)) ==
          charpoly_by_interpolation(kron(companion(to_qpoly(p)), companion(to_qpoly(q)))));
    CHECK(product_annihilator(p, spoly({-1, 1})) == p);
  }
}

TEST_CASE("closure under sum, product and shift") {
  CFiniteSeq fib({1, 1}, {0, 1}), pow2({2}, {1});
  auto f = fib.terms(30), g = pow2.terms(30);
  auto s = (fib + pow2).terms(30), p = (fib * pow2).terms(30), sq = (fib * fib).terms(30);
  auto sh = fib.shift().terms(29);
  for (std::size_t n = 0; n < 30; ++n) {
    CHECK(s[n] == f[n] + g[n]);
    CHECK(p[n] == f[n] * g[n]);
    CHECK(sq[n] == f[n] * f[n]);
    if (n + 1 < 30) CHECK(sh[n] == f[n + 1]);
  }
}

TEST_CASE("C-finite ansatz proves the fixed-point identities") {
  LfixProof p1 = prove_lfix(CFiniteSeq::fix_l(4), 1);
  CHECK(p1.holds);
  CHECK(p1.annihilator.size() - 1 == 12);
  LfixProof p2 = prove_lfix(CFiniteSeq::fix_l2(2, 3), 2);
  CHECK(p2.holds);
  CHECK(p2.annihilator.size() - 1 == 84);

  CFiniteSeq fib({1, 1}, {1, 1});
  auto f = fib.terms(5);
  CHECK(f[2] * f[2] - f[1] * f[3] - f[2] == -1);  // b_2 = 4 - 3 - 2
  LfixProof bad = prove_lfix(fib, 1);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.first_nonzero);
  CHECK(*bad.first_nonzero == 1);

  // L^3 would need an annihilator of order 9^4 + 3
  CHECK_THROWS_AS(prove_lfix(CFiniteSeq::fix_l(4), 3), OrderOverflow);
  // fix_l(k) is not fixed by L^2 unless it is by L
  CHECK_FALSE(prove_lfix_identity(CFiniteSeq::fix_l2(2, 3), 1));
}

TEST_CASE("identities hold for random parameters") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 6; ++trial) {
    CHECK(prove_lfix_identity(CFiniteSeq::fix_l(random_rational(rng)), 1));
    CHECK(prove_lfix_identity(CFiniteSeq::fix_l2(random_rational(rng), random_rational(rng)), 2));
  }
}

TEST_CASE("constant-coefficient guessing") {
  auto rec5 = guess_constant_rec(fix_l(5, 12).entries(), 5);
  REQUIRE(rec5);
  CHECK(rec5->order == 3);
  std::vector<std::vector<Scalar>> expected{{1}, {-5}, {5}, {-1}};
  CHECK(rec5->coeffs == expected);

  auto rec3 = guess_constant_rec(fix_l(3, 15).entries(), 5);
  REQUIRE(rec3);
  CHECK(rec3->order == 3);
  CHECK(annihilates(*rec3, fix_l(3, 15).entries()));

  // the term requirement applies per order tried: a hit at order 3 needs 11 terms
  CHECK(guess_constant_rec(fix_l(3, 11).entries(), 5));
  std::vector<Scalar> fact{1};
  for (long n = 1; n < 14; ++n) fact.push_back(fact.back() * Scalar(n));
  CHECK_THROWS_AS(guess_constant_rec(fact, 5), InsufficientTerms);
  fact.push_back(fact.back() * Scalar(14));
  CHECK_FALSE(guess_constant_rec(fact, 5));

  // powers of 2 plus n: (x - 2)(x - 1)^2
  std::vector<Scalar> t;
  for (long n = 0; n < 15; ++n) t.emplace_back((1L << n) + n);
  auto rec = guess_constant_rec(t, 5);
  REQUIRE(rec);
  CHECK(rec->order == 3);
}

TEST_CASE("polynomial-coefficient guessing") {
  std::vector<Scalar> tri;
  for (long n = 0; n < 12; ++n) tri.emplace_back((n + 2) * (n + 1) / 2);
  auto rec = guess_polyrec(tri, 1, 1);
  REQUIRE(rec);
  CHECK(rec->order == 1);
  CHECK(annihilates(*rec, tri));
  // n a_n = (n + 2) a_{n-1} up to scaling
  const auto& p0 = rec->coeffs[0];
  const auto& p1 = rec->coeffs[1];
  CHECK(p0[0] == 0);
  CHECK(p1[0] == Scalar(-2) * p0[1]);
  CHECK(p1[1] == -p0[1]);

  // factorials need degree 1: a_n = n a_{n-1}
  std::vector<Scalar> fact{1};
  for (long n = 1; n < 15; ++n) fact.push_back(fact.back() * Scalar(n));
  CHECK_FALSE(guess_polyrec(fact, 3, 0));
  auto f = guess_polyrec(fact, 3, 1);
  REQUIRE(f);
  CHECK(f->order == 1);
  CHECK_THROWS_AS(guess_polyrec(std::vector<Scalar>(fact.begin(), fact.begin() + 8), 6, 2),
                  InsufficientTerms);
}

TEST_CASE("modular certificates for the L^3-fixed sequence") {
  auto mod61 = extend_fixed_lm_values(std::vector<Z61>{1, 2, 5, 9}, 3, 40);
  auto mod62 = extend_fixed_lm_values(std::vector<Z62>{1, 2, 5, 9}, 3, 40);
  CHECK(certify_no_recurrence_mod(mod61, 10, 0));
  CHECK(certify_no_recurrence_mod(mod61, 6, 1));
  CHECK(certify_no_recurrence_mod(mod61, 4, 2));
  CHECK(certify_no_recurrence_mod(mod62, 10, 0));
  // a sequence that does satisfy a short recurrence is not certified
  std::vector<Z61> k5;
  const Sequence k5_exact = fix_l(5, 40);
  for (const auto& x : k5_exact.entries()) k5.emplace_back(x.rational());
  CHECK_FALSE(certify_no_recurrence_mod(k5, 10, 0));
  // the exact and modular guessers agree on the terms both can reach
  Sequence exact = extend_fixed_lm(Sequence(std::vector<Scalar>{1, 2, 5, 9}), 3, 9);
  CHECK_FALSE(guess_constant_rec(exact.entries(), 2, 3));
}

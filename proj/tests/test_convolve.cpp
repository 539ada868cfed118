#include <random>

#include "doctest.h"
#include "logcv/convolve.hpp"
#include "logcv/fixedpoint.hpp"
#include "logcv/kernels.hpp"

using namespace logcv;

namespace {

Sequence ints(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return Sequence(std::move(v));
}

// Schoolbook product, one lambda at a time.
std::vector<Rational> naive_power(const std::vector<Rational>& p, int lambda) {
  std::vector<Rational> acc{Rational(1)};
  for (int k = 0; k < lambda; ++k) {
    std::vector<Rational> next(acc.size() + p.size() - 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += acc[i] * p[j];
    acc = std::move(next);
  }
  return acc;
}

kernels::IntSeq random_ints(std::mt19937_64& rng, std::size_t len, long hi) {
  std::uniform_int_distribution<long> v(-hi, hi);
  kernels::IntSeq a;
  for (std::size_t i = 0; i < len; ++i) a.emplace_back(v(rng));
  return a;
}

}  // namespace

TEST_CASE("poly_power examples") {
  CHECK(poly_power(ints({1, 1, 1}), 2) == ints({1, 2, 3, 2, 1}));
  CHECK(poly_power(ints({1, 1, 2}), 3) == ints({1, 3, 9, 13, 18, 12, 8}));
  CHECK(poly_power(ints({1, 2, 1}), 3) == ints({1, 6, 15, 20, 15, 6, 1}));
  CHECK(poly_power(ints({4, 7}), 1) == ints({4, 7}));
  CHECK_THROWS_AS(poly_power(ints({1, 1}), 0), DomainError);
}

TEST_CASE("poly_power matches schoolbook multiplication") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<long> v(1, 9), len(1, 5), lam(1, 13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> p;
    std::vector<Scalar> s;
    for (long i = 0, n = len(rng); i < n; ++i) {
      Rational x(v(rng), trial % 3 == 0 ? v(rng) : 1);
      x.canonicalize();
      p.push_back(x);
      s.emplace_back(x);
    }
    const int lambda = static_cast<int>(lam(rng));
    auto expected = naive_power(p, lambda);
    CHECK(poly_power(Sequence(s), lambda) == Sequence(std::vector<Scalar>(expected.begin(), expected.end())));
  }
}

TEST_CASE("power additivity and coefficient sums") {
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<long> v(1, 20), lam(1, 30);
  for (int trial = 0; trial < 30; ++trial) {
    Sequence p = ints({v(rng), v(rng), v(rng), v(rng)});
    const int l1 = static_cast<int>(lam(rng)), l2 = static_cast<int>(lam(rng));
    CHECK(poly_power(p, l1 + l2) == convolution(poly_power(p, l1), poly_power(p, l2)));
    Scalar sum(0), total(0);
    for (const auto& x : p.entries()) sum += x;
    for (const auto& x : poly_power(p, l1).entries()) total += x;
    CHECK(total == pow(sum, static_cast<unsigned>(l1)));
  }
  // the Scalar path obeys the same identity
  Sequence p8 = p_sr(8, 1);
  CHECK(poly_power(p8, 5) == convolution(poly_power(p8, 2), poly_power(p8, 3)));
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_ints(rng, 1 + static_cast<std::size_t>(trial) * 7, 1000);
    auto b = random_ints(rng, 1 + static_cast<std::size_t>(trial) * 5, 1000);
    CHECK(kernels::convolve_serial(a, b) == kernels::convolve_parallel(a, b));
    CHECK(kernels::l_operator_serial(a) == kernels::l_operator_parallel(a));
  }
  kernels::IntSeq p{1, 1, 3};
  for (int lambda : {1, 2, 7, 40, 64}) {
    auto s = kernels::power_serial(p, lambda), q = kernels::power_parallel(p, lambda);
    CHECK(s == q);
    auto ds = kernels::depth_serial(s, 8), dp = kernels::depth_parallel(q, 8);
    CHECK(ds.depth == dp.depth);
    CHECK(ds.witness_index == dp.witness_index);
    // and both agree with the generic depth
    Sequence seq(std::vector<Scalar>(s.begin(), s.end()));
    DepthResult g = log_concavity_depth(seq, 8);
    CHECK(g.depth == ds.depth);
    CHECK(g.witness_index == ds.witness_index);
  }
}

TEST_CASE("min_exponent") {
  CHECK(min_exponent(ints({1, 1, 1}), 2, 50) == 4);
  CHECK(min_exponent(ints({1, 1, 2}), 1, 50) == 3);
  CHECK(min_exponent(ints({1, 1, 6}), 4, 100) == 65);
  CHECK_FALSE(min_exponent(ints({1, 1, 6}), 4, 64));
  CHECK(min_exponent(ints({1, 2, 1}), 10, 3) == 1);
  CHECK_THROWS_AS(min_exponent(ints({1, 0, 1}), 1, 5), NonPositiveInput);
}

TEST_CASE("min_exponent_infty") {
  auto a = min_exponent_infty(ints({1, 1, 1}), 20, 20);
  REQUIRE(a);
  CHECK(a->lambda == 10);
  const Certificate& c10 = a->certificates.at(10);
  CHECK(c10.kind == CertKind::RFactor);
  CHECK(validate(c10, poly_power(ints({1, 1, 1}), 10)));
  // L^5 of p^10 is 9.10-factor log-concave to two decimals
  auto r5 = r_factor_supremum(l_iterate(poly_power(ints({1, 1, 1}), 10), 5));
  CHECK(*r5 >= Scalar(Rational(9095, 1000)));
  CHECK(*r5 < Scalar(Rational(9105, 1000)));
  CHECK(a->certificates.size() == 11);
  CHECK(a->isolated.empty());

  auto b = min_exponent_infty(ints({1, 1, 2}), 30, 20);
  REQUIRE(b);
  CHECK(b->lambda == 23);
  const Certificate& c23 = b->certificates.at(23);
  CHECK(c23.kind == CertKind::RFactor);
  CHECK(c23.m == 5);
  CHECK(std::abs(c23.r->approx() - 4.23) <= 0.005);

  auto c = min_exponent_infty(ints({1, 2, 1}), 5, 5);
  REQUIRE(c);
  CHECK(c->lambda == 1);
  CHECK_FALSE(min_exponent_infty(ints({1, 1, 1}), 9, 20));
}

TEST_CASE("exponent_table rows") {
  auto rows = exponent_table({ints({1, 1, 1}), ints({1, 1, 4})}, 10, 60, 50);
  REQUIRE(rows.size() == 2);
  std::vector<std::optional<int>> r1{1, 4, 7, 8, 9, 10, 10, 10, 10, 10};
  std::vector<std::optional<int>> r4{7, 22, 35, 42, 46, 48, 49, 49, 49, 49};
  CHECK(rows[0].min_lambda == r1);
  CHECK(rows[0].inf_lambda == 10);
  CHECK(rows[1].min_lambda == r4);
  CHECK(rows[1].inf_lambda == 49);
  CHECK(rows[0].findings.empty());
  CHECK(rows[1].findings.empty());
  for (const auto& [lambda, cert] : rows[0].inf_certificates) CHECK(cert.proves_infinite());
  CHECK(rows[0].poly == ints({1, 1, 1}));
}

TEST_CASE("table columns agree with the direct depth scan") {
  auto rows = exponent_table({ints({1, 1, 2})}, 6, 30, 50);
  for (int m = 1; m <= 6; ++m) CHECK(rows[0].min_lambda[static_cast<std::size_t>(m - 1)] == min_exponent(ints({1, 1, 2}), m, 30));
  // a row that never certifies within range
  auto none = exponent_table({ints({1, 1, 6})}, 3, 5, 50);
  CHECK_FALSE(none[0].inf_lambda);
  CHECK_FALSE(none[0].min_lambda[2]);
}

TEST_CASE("squares of p_8 lose depth, higher powers do not") {
  Sequence p8 = p_sr(8, 1);
  auto rows = square_depth_probe(p8, 10, 50);
  REQUIRE(rows.size() == 10);
  CHECK(rows[0].cert.kind == CertKind::FixedPoint);
  CHECK(rows[1].depth == 4);
  CHECK(log_concavity_depth(poly_power(p8, 2), 8).depth == 4);
  for (int n = 3; n <= 10; ++n) {
    CHECK(rows[static_cast<std::size_t>(n - 1)].cert.proves_infinite());
    CHECK(rows[static_cast<std::size_t>(n - 1)].n == n);
  }
  auto e = p8.entries();
  e.emplace_back(Rational(1, 4096));
  Sequence q(e);
  CHECK(log_concavity_depth(q, 8).depth >= 5);
  CHECK(log_concavity_depth(poly_power(q, 2), 8).depth == 4);
}

TEST_CASE("products of log-concave polynomials stay log-concave") {
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<long> len(1, 7), v(1, 30);
  int violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto make = [&] {
      // log-concave: a_n / a_{n-1} non-increasing
      std::vector<Scalar> a{Scalar(v(rng))};
      Rational step(v(rng), 3);
      step.canonicalize();
      for (long i = 1, n = len(rng); i < n; ++i) {
        a.emplace_back(Rational(a.back().rational() * step));
        Rational shrink(100 + v(rng) * 5, 100);
        shrink.canonicalize();
        step /= shrink;
      }
      return Sequence(std::move(a));
    };
    Sequence p = make(), q = make();
    REQUIRE(log_concavity_depth(p, 1).depth >= 1);
    REQUIRE(log_concavity_depth(q, 1).depth >= 1);
    if (log_concavity_depth(convolution(p, q), 1).depth < 1) ++violations;
  }
  CHECK(violations == 0);
}

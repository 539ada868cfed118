#include <random>

#include "doctest.h"
#include "logcv/certify.hpp"
#include "logcv/fixedpoint.hpp"

using namespace logcv;

namespace {

Sequence ints(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return Sequence(std::move(v));
}

Scalar q(long p, long d) { return Scalar(Rational(p, d)); }

// Ratios a_n / a_{n-1} shrink by a random factor in [lo, lo + 4] per step, so
// the r-factor supremum is at least lo.
Sequence random_ratio_sequence(std::mt19937_64& rng, int len, double lo) {
  std::uniform_int_distribution<long> slack(0, 400), start(1, 60);
  std::vector<Rational> a{Rational(start(rng), 7)};
  Rational step(start(rng), 5);
  const long base = static_cast<long>(lo * 100);
  for (int i = 1; i < len; ++i) {
    a.push_back(a.back() * step);
    step /= Rational(base + slack(rng), 100);
    step.canonicalize();
  }
  return Sequence(std::vector<Scalar>(a.begin(), a.end()));
}

Sequence random_positive(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<long> v(1, 50);
  std::vector<Scalar> a;
  for (int i = 0; i < len; ++i) a.emplace_back(v(rng));
  return Sequence(std::move(a));
}

}  // namespace

TEST_CASE("cc_threshold") {
  CHECK(cc_threshold(0) == Scalar::quadratic(Rational(3, 2), Rational(1, 2), 5));
  CHECK(cc_threshold(1) == 3);
  CHECK(cc_threshold(5) == 4);
  CHECK(cc_threshold(Rational(1, 4)) == Scalar::quadratic(Rational(3, 2), Rational(1, 2), 6));
  CHECK(std::abs(cc_threshold(0).approx() - 2.6180339887) < 1e-9);
  CHECK_THROWS_AS(cc_threshold(-1), DomainError);
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> n(0, 500), d(1, 20);
  for (int i = 0; i < 200; ++i) {
    Rational s1(n(rng), d(rng)), s2(n(rng), d(rng));
    s1.canonicalize();
    s2.canonicalize();
    if (s1 == s2) continue;
    if (s2 < s1) std::swap(s1, s2);
    // distinct quadratic fields do not compare inside the tower; the map
    // s -> (2t - 3)^2 = 5 + 4s with 2t - 3 > 0 carries the order exactly
    const Scalar t1 = Scalar(2) * cc_threshold(s1) - Scalar(3);
    const Scalar t2 = Scalar(2) * cc_threshold(s2) - Scalar(3);
    CHECK(t1.sign() > 0);
    CHECK(t1 * t1 == Scalar(Rational(5 + 4 * s1)));
    CHECK(t2 * t2 == Scalar(Rational(5 + 4 * s2)));
    CHECK(t1.approx() < t2.approx());
    // same field: 5 + 4s' = 4(5 + 4s)
    CHECK(cc_threshold(s1) < cc_threshold((4 * (5 + 4 * s1) - 5) / 4));
  }
}

TEST_CASE("certify_infinite on the worked examples") {
  Certificate c = certify_infinite(ints({1, 4, 6, 4}), 10);
  CHECK(c.kind == CertKind::RFactor);
  CHECK(c.m == 2);
  CHECK(*c.r == q(45, 16));
  REQUIRE(c.trace.size() == 3);
  CHECK(*c.trace[0].r_sup == q(9, 4));
  CHECK(*c.trace[1].r_sup == q(5, 2));

  Certificate p6 = certify_infinite(ints({1, 2, 2, 1}), 10);
  CHECK(p6.kind == CertKind::FixedPoint);
  CHECK(p6.m == 1);
  CHECK(p6.base == 0);
  CHECK(*p6.lambda == 1);

  Certificate bad = certify_infinite(ints({1, 1, 2}), 10);
  CHECK(bad.kind == CertKind::NotMLogConcave);
  CHECK(bad.m == 1);
  CHECK(*bad.witness_index == 1);
  CHECK(*bad.witness_value == -1);

  Certificate p2 = certify_infinite(Sequence({q(21, 8), q(15, 4), q(3, 2)}), 10);
  CHECK(p2.kind == CertKind::RFactor);
  CHECK(p2.m == 0);
  CHECK(*p2.r == q(25, 7));

  Certificate pair = certify_infinite(ints({3, 5}), 10);
  CHECK(pair.kind == CertKind::RFactor);
  CHECK(pair.r_infinite);

  CHECK_THROWS_AS(certify_infinite(ints({1, 0, 1}), 10), NonPositiveInput);
  CHECK_THROWS_AS(certify_infinite(ints({1, -2, 1}), 10), NonPositiveInput);
}

TEST_CASE("an undecided input reports Unknown with the full trace") {
  // ratios 4/3, 9/4, 4/3, and L gives (1,1,5,1,1): neither step decides
  Certificate c = certify_infinite(ints({1, 2, 3, 2, 1}), 1);
  CHECK(c.kind == CertKind::Unknown);
  CHECK(c.m == 1);
  CHECK(c.trace.size() == 2);
  CHECK(validate(c, ints({1, 2, 3, 2, 1})));
  // p_5 sits exactly on the threshold (3 + sqrt 5)/2
  Certificate p5 = certify_infinite(p_sr(5, 1), 3);
  CHECK(p5.kind == CertKind::RFactor);
  CHECK(p5.m == 0);
  CHECK(*p5.r == cc_threshold(0));
}

TEST_CASE("eigen-sequences are detected with lambda relative to the input") {
  Sequence doubled = ints({2, 4, 4, 2});
  CHECK(l_operator(doubled) == scale(ints({1, 2, 2, 1}), 4));
  Certificate c = certify_infinite(doubled, 10);
  REQUIRE(c.kind == CertKind::FixedPoint);
  CHECK(c.m == 1);
  CHECK(*c.lambda == 2);
  CHECK(verify_fixed(doubled, 1, *c.lambda));
  CHECK(normalize_eigen(doubled, *c.lambda) == ints({1, 2, 2, 1}));
  CHECK(validate(c, doubled));
}

TEST_CASE("a fixed point of L is never lifted past r = 2") {
  Sequence p12 = p_sr(12, 1);
  Certificate c = certify_infinite(p12, 50);
  CHECK(c.kind == CertKind::FixedPoint);
  CHECK(c.m == 1);
  for (const auto& row : c.trace) {
    REQUIRE(row.r_sup);
    CHECK(*row.r_sup < cc_threshold(0));
    CHECK(*row.r_sup <= 2);
  }
  CHECK(validate(c, p12));
}

TEST_CASE("certificates re-validate and survive scaling") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> cn(1, 40), cd(1, 13);
  int kinds[4] = {0, 0, 0, 0};
  for (int trial = 0; trial < 300; ++trial) {
    Sequence a = trial % 2 ? random_positive(rng, 3 + trial % 6)
                           : random_ratio_sequence(rng, 3 + trial % 7, 1.0 + (trial % 5) * 0.4);
    Certificate c = certify_infinite(a, 12);
    ++kinds[static_cast<int>(c.kind)];
    CHECK(validate(c, a));
    const Scalar factor(Rational(cn(rng), cd(rng)));
    Certificate s = certify_infinite(scale(a, factor), 12);
    CHECK(s.kind == c.kind);
    CHECK(s.m == c.m);
    CHECK(validate(s, scale(a, factor)));
  }
  CHECK(kinds[static_cast<int>(CertKind::NotMLogConcave)] > 0);
  CHECK(kinds[static_cast<int>(CertKind::RFactor)] > 0);
}

TEST_CASE("tampered certificates fail validation") {
  Sequence a = ints({1, 4, 6, 4});
  Certificate c = certify_infinite(a, 10);
  Certificate early = c;
  early.m = 1;
  early.r = q(5, 2);
  CHECK_FALSE(validate(early, a));
  Certificate wrong_r = c;
  wrong_r.r = q(3, 1);
  CHECK_FALSE(validate(wrong_r, a));
  Certificate p6 = certify_infinite(ints({1, 2, 2, 1}), 10);
  p6.lambda = Scalar(3);
  CHECK_FALSE(validate(p6, ints({1, 2, 2, 1})));
  Certificate bad = certify_infinite(ints({1, 1, 2}), 10);
  bad.m = 2;
  CHECK_FALSE(validate(bad, ints({1, 1, 2})));
}

TEST_CASE("Craven-Csordas containment on random sequences") {
  // r >= cc_threshold(s) exactly when s <= ((2r - 3)^2 - 5)/4; taking s at that
  // bound with r the exact supremum makes the containment as tight as possible
  std::mt19937_64 rng(71);
  int violations = 0, tested = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Sequence a = random_ratio_sequence(rng, 3 + trial % 9, 2.62);
    const Rational r = r_factor_supremum(a)->rational();
    const Rational t = 2 * r - 3;
    const Rational s = (t * t - 5) / 4;
    REQUIRE(s >= 0);
    CHECK(cc_threshold(s) == Scalar(r));
    ++tested;
    auto image = r_factor_supremum(l_operator(a));
    if (image && *image < Scalar(Rational(r + s))) ++violations;
    if (image && *image < Scalar(r)) ++violations;
  }
  CHECK(tested == 1000);
  CHECK(violations == 0);
}

TEST_CASE("kurtz_certificate") {
  CHECK(kurtz_certificate(ints({1, 2, 1})));
  CHECK_FALSE(kurtz_certificate(ints({1, 4, 6, 4, 1})));
  CHECK(kurtz_certificate(ints({1, 5, 5, 1})));
  // 1 + 5x + 5x^2 + x^3 = (1 + x)(1 + 4x + x^2), discriminant 12 > 0
  CHECK(ints({1, 5, 5, 1}).entries() ==
        std::vector<Scalar>{1, Scalar(1) + 4, Scalar(4) + 1, 1});
  CHECK_THROWS_AS(kurtz_certificate(ints({1, 0, 1})), NonPositiveInput);
}

TEST_CASE("hurwitz_certificate") {
  CHECK(hurwitz_certificate(ints({1, 6, 15, 20, 15, 6, 1})));
  const Rational m(400, 225);
  CHECK(m * m * m - m * m - 1 > 0);
  CHECK_FALSE(hurwitz_certificate(ints({1, 1, 1, 1, 1, 1, 1})));
  CHECK_THROWS_AS(hurwitz_certificate(ints({1, 4, 6, 4, 1})), DegreeTooSmall);
  CHECK_THROWS_AS(hurwitz_certificate(ints({1, 6, 15, 0, 15, 6, 1})), NonPositiveInput);
  // a_n = Q^(-n(n-1)/2) has every ratio equal to Q; the root is 1.46557...
  auto constant_ratio = [](const Rational& ratio) {
    std::vector<Scalar> a;
    for (long n = 0; n < 8; ++n) {
      Rational x = 1;
      for (long k = 0; k < n * (n - 1) / 2; ++k) x /= ratio;
      a.emplace_back(x);
    }
    return Sequence(std::move(a));
  };
  CHECK(hurwitz_certificate(constant_ratio(Rational(1466, 1000))));
  CHECK_FALSE(hurwitz_certificate(constant_ratio(Rational(1465, 1000))));
}

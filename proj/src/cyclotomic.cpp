#include "logcv/cyclotomic.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "logcv/errors.hpp"
#include "logcv/poly.hpp"

namespace logcv {
namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

QPoly x_pow_minus_one(int d) {
  QPoly p(static_cast<std::size_t>(d) + 1, Rational(0));
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  return p;
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  // Euler's criterion
  long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

Rational eval_rational(const QPoly& p, const Rational& x) { return poly_eval(p, x); }

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

QPoly cyclotomic_poly(int n) {
  if (n < 1) throw DomainError("cyclotomic polynomial needs n >= 1");
  QPoly num{Rational(1)}, den{Rational(1)};
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = moebius(n / d);
    if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
    if (mu == -1) den = poly_mul(den, x_pow_minus_one(d));
  }
  auto [q, r] = poly_divmod(num, den);
  if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

QPoly min_poly_2cos(int s) {
  if (s < 3) throw DomainError("min_poly_2cos needs s >= 3, got " + std::to_string(s));
  QPoly w = cyclotomic_poly(s);
  const int n = static_cast<int>(w.size() - 1) / 2;
  QPoly psi(static_cast<std::size_t>(n) + 1, Rational(0));
  // Peel x^n (x + 1/x)^k = x^(n-k) (x^2 + 1)^k off the palindromic Phi_s.
  for (int k = n; k >= 0; --k) {
    Rational c = w[static_cast<std::size_t>(n + k)];
    psi[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    mpz_class binom = 1;
    for (int i = 0; i <= k; ++i) {
      w[static_cast<std::size_t>(n - k + 2 * i)] -= c * binom;
      binom = binom * (k - i) / (i + 1);
    }
  }
  for (const auto& x : w)
    if (sgn(x) != 0) throw std::logic_error("Phi_s is not a palindromic pullback");
  return psi;
}

int normalize_conductor(int s) { return (s % 4 == 2) ? s / 2 : s; }

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Interval r{p1, p1};
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < r.lo) r.lo = *p;
    if (*p > r.hi) r.hi = *p;
  }
  return r;
}

long max_refinement_bits() {
  if (const char* env = std::getenv("LOGCV_MAX_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 64) return v;
  }
  return 16384;
}

RealCyclotomicField::RealCyclotomicField(int s) : s_(s), psi_(min_poly_2cos(s)) {}

QPoly RealCyclotomicField::reduce(const QPoly& p) const {
  QPoly r = p;
  poly_trim(r);
  if (r.size() < psi_.size()) return r;
  return poly_mod(r, psi_);
}

QPoly RealCyclotomicField::mul(const QPoly& a, const QPoly& b) const {
  return reduce(poly_mul(a, b));
}

QPoly RealCyclotomicField::inverse(const QPoly& a) const {
  QPoly r = reduce(a);
  if (r.empty()) throw DivisionByZero();
  if (r.size() == 1) return {Rational(1) / r[0]};
  return poly_inverse_mod(r, psi_);
}

QPoly RealCyclotomicField::dickson(long k) const {
  k %= s_;
  if (k < 0) k += s_;
  k = std::min<long>(k, s_ - k);
  QPoly d0{Rational(2)};
  if (k == 0) return reduce(d0);
  QPoly t = reduce(QPoly{Rational(0), Rational(1)});
  QPoly d1 = t;
  for (long i = 1; i < k; ++i) {
    QPoly d2 = poly_sub(mul(t, d1), d0);
    d0 = std::move(d1);
    d1 = std::move(d2);
  }
  return d1;
}

QPoly RealCyclotomicField::compose(const QPoly& p, const QPoly& x) const {
  QPoly acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = poly_add(mul(acc, x), QPoly{p[i]});
  return acc;
}

Interval RealCyclotomicField::enclosure(long bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (degree() == 1) {
    Rational root = -psi_[0];
    return {root, root};
  }
  if (enc_bits_ == 0) {
    const double approx = 2.0 * std::cos(2.0 * std::numbers::pi / s_);
    Rational eps(1);
    eps /= mpz_class(1) << 40;
    enc_ = {Rational(approx) - eps, Rational(approx) + eps};
    if (sgn(eval_rational(psi_, enc_.lo)) * sgn(eval_rational(psi_, enc_.hi)) >= 0)
      throw std::logic_error("failed to bracket 2cos(2pi/" + std::to_string(s_) + ")");
    enc_bits_ = 39;
  }
  const int lo_sign = sgn(eval_rational(psi_, enc_.lo));
  while (enc_bits_ < bits) {
    Rational mid = (enc_.lo + enc_.hi) / 2;
    int ms = sgn(eval_rational(psi_, mid));
    if (ms == 0) return {mid, mid};
    if (ms == lo_sign)
      enc_.lo = mid;
    else
      enc_.hi = mid;
    ++enc_bits_;
  }
  return enc_;
}

int RealCyclotomicField::sign(const QPoly& a) const {
  QPoly r = reduce(a);
  if (r.empty()) return 0;
  if (r.size() == 1) return sgn(r[0]);
  const long cap = max_refinement_bits();
  for (long bits = 64; bits <= cap; bits *= 2) {
    Interval t = enclosure(bits);
    Interval acc{r.back(), r.back()};
    for (std::size_t i = r.size() - 1; i-- > 0;) acc = acc * t + Interval{r[i], r[i]};
    if (acc.lo > 0) return 1;
    if (acc.hi < 0) return -1;
  }
  throw PrecisionExhausted("sign undecided after " + std::to_string(cap) +
                           " bits in conductor " + std::to_string(s_));
}

const RealCyclotomicField& real_cyclotomic_field(int s) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RealCyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[s];
  if (!slot) slot = std::make_unique<RealCyclotomicField>(s);
  return *slot;
}

int sqrt_conductor(long d) { return static_cast<int>(d % 4 == 1 ? d : 4 * d); }

std::optional<QPoly> sqrt_in_field(long d, int s) {
  if (d < 2 || s < 3) return std::nullopt;
  const auto& field = real_cyclotomic_field(s);
  QPoly result{Rational(1)};
  long rest = d;
  for (long p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p != 0) continue;
    rest /= p;
    if (rest % p == 0) return std::nullopt;  // not square-free
    QPoly root;
    if (p == 2) {
      if (s % 8 != 0) return std::nullopt;
      root = field.dickson(s / 8);
    } else if (p % 4 == 1) {
      if (s % p != 0) return std::nullopt;
      for (long k = 1; k <= (p - 1) / 2; ++k) {
        QPoly term = field.dickson(k * (s / p));
        root = legendre(k, p) > 0 ? poly_add(root, term) : poly_sub(root, term);
      }
    } else {
      if (s % (4 * p) != 0) return std::nullopt;
      // Im of the Gauss sum: sum (k|p) sin(2 pi k/p), sin(x) = cos(x - pi/2).
      for (long k = 1; k < p; ++k) {
        QPoly term = field.dickson(std::labs(4 * k - p) * (s / (4 * p)));
        root = legendre(k, p) > 0 ? poly_add(root, term) : poly_sub(root, term);
      }
      root = poly_scale(root, Rational(1, 2));
    }
    result = field.mul(result, root);
  }
  if (field.mul(result, result) != QPoly{Rational(d)})
    throw std::logic_error("sqrt(" + std::to_string(d) + ") construction failed");
  if (field.sign(result) < 0) result = poly_scale(result, Rational(-1));
  return result;
}

}  // namespace logcv

#include "logcv/fixedpoint.hpp"

#include "logcv/laurent.hpp"

namespace logcv {

namespace {

// a_n = c1 a_{n-1} + c2 a_{n-2} + c3 a_{n-3}, a_0 = 1, a_{-1} = a_{-2} = 0.
Sequence unroll3(const Scalar& c1, const Scalar& c2, const Scalar& c3, std::size_t n_terms) {
  if (n_terms == 0) throw DomainError("need at least one term");
  std::vector<Scalar> a;
  a.reserve(n_terms);
  auto at = [&](long i) { return i < 0 ? Scalar(0) : a[static_cast<std::size_t>(i)]; };
  a.emplace_back(1);
  for (long n = 1; n < static_cast<long>(n_terms); ++n)
    a.push_back(c1 * at(n - 1) + c2 * at(n - 2) + c3 * at(n - 3));
  return Sequence(std::move(a), SeqKind::PrefixOfInfinite);
}

// Limit of the extension as the last prefix entry moves to a_m + eps, eps -> 0.
// Throws SingularStep when the limit does not exist or the precision is spent.
std::vector<Scalar> extend_through_limit(const std::vector<Scalar>& prefix, int m,
                                         std::size_t n_terms, long precision) {
  using L = Laurent<Scalar>;
  LaurentPrecision<Scalar> guard(precision);
  std::vector<L> a;
  for (const auto& x : prefix) a.emplace_back(x);
  a.back() = a.back() + L::eps();
  while (a.size() < n_terms) a.push_back(next_fixed_lm_term(a, m));
  std::vector<Scalar> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].valuation() < 0 || a[i].prec() <= 0)
      throw SingularStep(i, "a_" + std::to_string(i) + " has no finite limit at this precision");
    out.push_back(a[i].coeff(0));
  }
  return out;
}

}  // namespace

Sequence fix_l(const Scalar& k, std::size_t n_terms) {
  return unroll3(k, -k, Scalar(1), n_terms);
}

Sequence fix_l2(const Scalar& beta, const Scalar& gamma, std::size_t n_terms) {
  return unroll3(beta, gamma - beta * beta, Scalar(1), n_terms);
}

Sequence extend_fixed_lm(const Sequence& prefix, int m, std::size_t n_terms) {
  try {
    return Sequence(extend_fixed_lm_values(prefix.entries(), m, n_terms),
                    SeqKind::PrefixOfInfinite);
  } catch (const SingularStep& first) {
    // A zero slope leaves the next term free locally. Select the continuous
    // continuation of the generic family instead (perturb the last prefix entry
    // and let it tend to its value), and keep it only if it is exactly fixed.
    for (long precision = 8; precision <= 64; precision *= 2) {
      try {
        Sequence a(extend_through_limit(prefix.entries(), m, n_terms, precision),
                   SeqKind::PrefixOfInfinite);
        if (verify_fixed(a, m, Scalar(1))) return a;
        break;
      } catch (const SingularStep&) {
      } catch (const DivisionByZero&) {
      }
    }
    throw SingularStep(first.index(), first.what());
  }
}

bool verify_fixed(const Sequence& seq, int m, const Scalar& lambda) {
  if (m < 1) throw DomainError("verify_fixed needs m >= 1");
  if (seq.kind() == SeqKind::PrefixOfInfinite && seq.size() <= static_cast<std::size_t>(m))
    return false;  // nothing comparable
  Sequence image = l_iterate(seq, m);
  for (std::size_t i = 0; i < image.size(); ++i)
    if (!(image[i] == lambda * seq[i])) return false;
  return true;
}

Sequence normalize_eigen(const Sequence& seq, const Scalar& lambda) {
  if (lambda.is_zero()) throw DivisionByZero();
  return scale(seq, Scalar(1) / lambda);
}

Sequence p_sr(long s, long r) {
  if (s < 3 || r < 1 || r >= s) throw DomainError("p_sr needs s >= 3 and 1 <= r < s");
  if (s == 2 * r) throw DomainError("s = 2r excluded");
  Sequence a = fix_l(Scalar(1) + cos2pi(r, s), static_cast<std::size_t>(s - 2));
  return a.as(SeqKind::FinitePolynomial);
}

std::optional<Scalar> p_s_threshold(long s) {
  if (s < 3) throw DomainError("p_s_threshold needs s >= 3");
  if (s <= 4) return std::nullopt;
  if (s % 2 == 0) return Scalar(2) / cos2pi(1, s);
  const Scalar gap = Scalar(1) - cos2pi(1, 2 * s);
  return Scalar(1) / (gap * gap);
}

Sequence generate(const FixedFamily& family, std::size_t n_terms) {
  return std::visit(
      [&](const auto& p) -> Sequence {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FixedFamily::ByK>) {
          if (family.m != 1) throw DomainError("k parameterizes L-fixed sequences (m = 1)");
          return fix_l(p.k, n_terms);
        } else if constexpr (std::is_same_v<P, FixedFamily::ByBetaGamma>) {
          if (family.m != 2) throw DomainError("beta, gamma parameterize L^2-fixed sequences (m = 2)");
          return fix_l2(p.beta, p.gamma, n_terms);
        } else {
          return extend_fixed_lm(p.prefix, family.m, n_terms);
        }
      },
      family.params);
}

std::vector<std::vector<long>> search_integer_fixed(int m, long bound, std::size_t n_terms) {
  if (m < 1 || bound < 1) throw DomainError("search needs m >= 1 and bound >= 1");
  std::vector<std::vector<long>> hits;
  std::vector<long> digits(static_cast<std::size_t>(m), 1);
  for (;;) {
    std::vector<Scalar> prefix{Scalar(1)};
    for (long d : digits) prefix.emplace_back(d);
    std::vector<Scalar> terms = extend_fixed_lm_values(std::move(prefix), m, m + 1);
    bool ok = true;
    try {
      // stop at the first fraction or non-positive term
      while (ok && terms.size() < n_terms) {
        terms.push_back(next_fixed_lm_term(terms, m));
        ok = terms.back().is_integer() && terms.back().sign() > 0;
      }
    } catch (const SingularStep&) {
      ok = false;
    }
    if (ok) {
      Sequence seq(terms, SeqKind::PrefixOfInfinite);
      bool lower = false;
      for (int j = 1; j < m && !lower; ++j) lower = verify_fixed(seq, j, Scalar(1));
      if (!lower) {
        std::vector<long> hit{1};
        hit.insert(hit.end(), digits.begin(), digits.end());
        hits.push_back(std::move(hit));
      }
    }
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == bound) digits[i++] = 1;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return hits;
}

}  // namespace logcv

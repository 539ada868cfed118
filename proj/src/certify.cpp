#include "logcv/certify.hpp"

#include <algorithm>

#include "logcv/fixedpoint.hpp"

namespace logcv {

std::string to_string(CertKind kind) {
  switch (kind) {
    case CertKind::NotMLogConcave: return "NotMLogConcave";
    case CertKind::FixedPoint: return "FixedPoint";
    case CertKind::RFactor: return "RFactor";
    case CertKind::Unknown: return "Unknown";
  }
  return "?";
}

Scalar cc_threshold(Rational s) {
  s.canonicalize();
  if (s < 0) throw DomainError("cc_threshold needs s >= 0");
  // sqrt(N/D) = sqrt(N D) / D
  const Rational radicand = 5 + 4 * s;
  const Integer &num = radicand.get_num(), &den = radicand.get_den();
  return (Scalar(3) + Scalar::sqrt(num * den) / Scalar(den)) / Scalar(2);
}

namespace {

void require_positive(const Sequence& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i].sign() <= 0)
      throw NonPositiveInput("entry " + std::to_string(i) + " is " + seq[i].str() +
                             "; certificates need positive entries");
}

int min_sign(const Sequence& s) {
  int lo = 1;
  for (const auto& x : s.entries()) lo = std::min(lo, x.sign());
  return lo;
}

std::size_t max_entry_bits(const Sequence& s) {
  std::size_t bits = 0;
  for (const auto& x : s.entries()) {
    if (!x.is_rational()) continue;
    const Rational& q = x.rational();
    bits = std::max(bits, mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
  }
  return bits;
}

}  // namespace

Certificate certify_infinite(const Sequence& input, int max_iter, std::size_t max_bits) {
  if (max_iter < 1) throw DomainError("max_iter must be >= 1");
  require_positive(input);
  const Scalar threshold = cc_threshold(0);

  Certificate cert;
  std::vector<Sequence> iterates{input.as(SeqKind::FinitePolynomial)};
  for (int m = 0;; ++m) {
    if (m > 0) iterates.push_back(l_operator(iterates.back()));
    const Sequence& cur = iterates.back();
    TraceEntry row;
    row.m = m;
    row.min_sign = min_sign(cur);
    if (row.min_sign > 0) {
      row.r_sup = r_factor_supremum(cur);
      row.r_infinite = !row.r_sup;
    }
    cert.trace.push_back(row);
    cert.m = m;

    if (row.min_sign < 0) {
      cert.kind = CertKind::NotMLogConcave;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (cur[i].sign() < 0) {
          cert.witness_index = i;
          cert.witness_value = cur[i];
          break;
        }
      }
      return cert;
    }
    for (int j = 0; j < m; ++j) {
      auto lambda = proportionality(iterates[static_cast<std::size_t>(j)], cur);
      if (lambda && lambda->sign() > 0) {
        cert.kind = CertKind::FixedPoint;
        cert.lambda = *lambda;
        cert.base = j;
        return cert;
      }
    }
    if (row.min_sign > 0 && (row.r_infinite || *row.r_sup >= threshold)) {
      cert.kind = CertKind::RFactor;
      cert.r = row.r_sup;
      cert.r_infinite = row.r_infinite;
      return cert;
    }
    if (m == max_iter) return cert;  // Unknown
    if (max_bits != 0 && 2 * max_entry_bits(cur) > max_bits) {
      cert.budget_exhausted = true;
      return cert;
    }
  }
}

bool validate(const Certificate& cert, const Sequence& seq) {
  const Sequence a = seq.as(SeqKind::FinitePolynomial);
  switch (cert.kind) {
    case CertKind::NotMLogConcave: {
      DepthResult d = log_concavity_depth(a, cert.m);
      return d.depth == cert.m - 1 && d.witness_index == cert.witness_index &&
             d.witness_value == cert.witness_value;
    }
    case CertKind::FixedPoint: {
      if (!cert.lambda || cert.lambda->sign() <= 0 || cert.base < 0 || cert.base >= cert.m)
        return false;
      if (log_concavity_depth(a, cert.m).depth < cert.m) return false;
      return verify_fixed(l_iterate(a, cert.base), cert.m - cert.base, *cert.lambda);
    }
    case CertKind::RFactor: {
      if (log_concavity_depth(a, cert.m).depth < cert.m) return false;
      const Sequence top = l_iterate(a, cert.m);
      if (!top.all_positive()) return false;
      auto r = r_factor_supremum(top);
      if (cert.r_infinite) return !r;
      return r && cert.r && *r == *cert.r && *r >= cc_threshold(0);
    }
    case CertKind::Unknown:
      return true;
  }
  return false;
}

bool kurtz_certificate(const Sequence& seq) {
  require_positive(seq);
  return is_r_factor(seq, 4);
}

bool hurwitz_certificate(const Sequence& seq) {
  require_positive(seq);
  if (seq.size() < 7)
    throw DegreeTooSmall("degree " + std::to_string(seq.degree()) + " <= 5");
  // q > 0 lies above the unique real root of r^3 - r^2 - 1 exactly when the cubic is positive
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    const Scalar q = seq[n] * seq[n] / (seq[n - 1] * seq[n + 1]);
    if ((q * q * q - q * q - Scalar(1)).sign() <= 0) return false;
  }
  return true;
}

}  // namespace logcv

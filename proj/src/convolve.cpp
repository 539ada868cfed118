#include "logcv/convolve.hpp"

#include <algorithm>
#include <climits>

#include "logcv/kernels.hpp"

namespace logcv {

namespace {

kernels::IntSeq to_ints(const Sequence& s) {
  kernels::IntSeq out;
  out.reserve(s.size());
  for (const auto& x : s.entries()) out.push_back(x.rational().get_num());
  return out;
}

Sequence from_ints(const kernels::IntSeq& a) {
  return Sequence(std::vector<Scalar>(a.begin(), a.end()));
}

void require_positive(const Sequence& p) {
  if (!p.all_positive()) throw NonPositiveInput("power sweeps need positive coefficients");
}

// Depth implied by a certificate: INT_MAX stands for unbounded.
int depth_of(const Certificate& c) {
  if (c.kind == CertKind::NotMLogConcave) return c.m - 1;
  if (c.proves_infinite()) return INT_MAX;
  return c.m;
}

}  // namespace

Sequence convolution(const Sequence& a, const Sequence& b) {
  if (a.all_integer() && b.all_integer())
    return from_ints(kernels::convolve_parallel(to_ints(a), to_ints(b)));
  std::vector<Scalar> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return Sequence(std::move(out));
}

Sequence poly_power(const Sequence& p, int lambda) {
  if (lambda < 1) throw DomainError("exponent must be >= 1");
  if (p.all_integer()) return from_ints(kernels::power_parallel(to_ints(p), lambda));
  Sequence result = p, base = p;
  bool have = false;
  for (unsigned e = static_cast<unsigned>(lambda);;) {
    if (e & 1U) {
      result = have ? convolution(result, base) : base;
      have = true;
    }
    e >>= 1U;
    if (e == 0) break;
    base = convolution(base, base);
  }
  return result;
}

std::optional<int> min_exponent(const Sequence& p, int m, int lambda_max) {
  require_positive(p);
  if (m < 1) throw DomainError("m must be >= 1");
  const Sequence poly = p.as(SeqKind::FinitePolynomial);
  if (poly.all_integer()) {
    const auto base = to_ints(poly);
    kernels::IntSeq power = base;
    for (int lambda = 1; lambda <= lambda_max; ++lambda) {
      if (lambda > 1) power = kernels::convolve_parallel(power, base);
      if (kernels::depth_parallel(power, m).depth >= m) return lambda;
    }
    return std::nullopt;
  }
  Sequence power = poly;
  for (int lambda = 1; lambda <= lambda_max; ++lambda) {
    if (lambda > 1) power = convolution(power, poly);
    if (log_concavity_depth(power, m).depth >= m) return lambda;
  }
  return std::nullopt;
}

namespace {

InfinityColumn infinity_band(std::vector<Certificate>& certs) {
  // certs[mu - 1] for mu = 1..lambda_max
  InfinityColumn col;
  const int lambda_max = static_cast<int>(certs.size());
  int mu = lambda_max;
  while (mu >= 1 && certs[static_cast<std::size_t>(mu - 1)].proves_infinite()) --mu;
  col.lambda = mu + 1;
  for (int k = col.lambda; k <= lambda_max; ++k)
    col.certificates.emplace(k, std::move(certs[static_cast<std::size_t>(k - 1)]));
  for (int k = 1; k < mu; ++k)
    if (certs[static_cast<std::size_t>(k - 1)].proves_infinite()) col.isolated.push_back(k);
  return col;
}

std::vector<Certificate> certify_powers(const Sequence& p, int lambda_max, int max_iter) {
  std::vector<Certificate> certs(static_cast<std::size_t>(std::max(lambda_max, 0)));
#pragma omp parallel for schedule(dynamic, 1)
  for (int lambda = 1; lambda <= lambda_max; ++lambda)
    certs[static_cast<std::size_t>(lambda - 1)] =
        certify_infinite(poly_power(p, lambda), max_iter, kSweepMaxBits);
  return certs;
}

}  // namespace

std::optional<InfinityColumn> min_exponent_infty(const Sequence& p, int lambda_max, int max_iter) {
  require_positive(p);
  auto certs = certify_powers(p.as(SeqKind::FinitePolynomial), lambda_max, max_iter);
  InfinityColumn col = infinity_band(certs);
  if (col.lambda > lambda_max) return std::nullopt;
  return col;
}

std::vector<SweepRow> exponent_table(const std::vector<Sequence>& polys, int m_max,
                                     int lambda_max, int max_iter) {
  if (m_max < 1 || lambda_max < 1) throw DomainError("m_max and lambda_max must be >= 1");
  for (const auto& p : polys) require_positive(p);
  const int steps = std::max(max_iter, m_max);
  const std::size_t per_row = static_cast<std::size_t>(lambda_max);
  const long jobs = static_cast<long>(polys.size() * per_row);
  std::vector<Certificate> certs(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic, 1)
  for (long j = 0; j < jobs; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) / per_row;
    const int lambda = static_cast<int>(static_cast<std::size_t>(j) % per_row) + 1;
    certs[static_cast<std::size_t>(j)] = certify_infinite(
        poly_power(polys[row].as(SeqKind::FinitePolynomial), lambda), steps, kSweepMaxBits);
  }

  std::vector<SweepRow> table;
  for (std::size_t row = 0; row < polys.size(); ++row) {
    SweepRow r{polys[row], {}, std::nullopt, {}, {}};
    std::vector<Certificate> mine(certs.begin() + static_cast<long>(row * per_row),
                                  certs.begin() + static_cast<long>((row + 1) * per_row));
    for (int m = 1; m <= m_max; ++m) {
      std::optional<int> found;
      for (int lambda = 1; lambda <= lambda_max && !found; ++lambda)
        if (depth_of(mine[static_cast<std::size_t>(lambda - 1)]) >= m) found = lambda;
      r.min_lambda.push_back(found);
    }
    for (int m = 2; m <= m_max; ++m) {
      const auto &prev = r.min_lambda[static_cast<std::size_t>(m - 2)],
                 &cur = r.min_lambda[static_cast<std::size_t>(m - 1)];
      if (prev && cur && *cur < *prev)
        r.findings.push_back("minimal exponent drops from " + std::to_string(*prev) + " at m = " +
                             std::to_string(m - 1) + " to " + std::to_string(*cur) + " at m = " +
                             std::to_string(m));
    }
    for (int lambda = 1; lambda <= lambda_max; ++lambda)
      if (mine[static_cast<std::size_t>(lambda - 1)].budget_exhausted)
        r.findings.push_back("lambda = " + std::to_string(lambda) + " undecided within the size cap");
    InfinityColumn col = infinity_band(mine);
    if (col.lambda <= lambda_max) {
      r.inf_lambda = col.lambda;
      r.inf_certificates = std::move(col.certificates);
    }
    for (int k : col.isolated)
      r.findings.push_back("lambda = " + std::to_string(k) +
                           " is certified but a larger exponent is not");
    table.push_back(std::move(r));
  }
  return table;
}

std::vector<ProbeRow> square_depth_probe(const Sequence& p, int n_max, int max_iter) {
  require_positive(p);
  std::vector<ProbeRow> rows(static_cast<std::size_t>(std::max(n_max, 0)));
  const Sequence poly = p.as(SeqKind::FinitePolynomial);
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = 1; n <= n_max; ++n) {
    ProbeRow& row = rows[static_cast<std::size_t>(n - 1)];
    row.n = n;
    row.cert = certify_infinite(poly_power(poly, n), max_iter, kSweepMaxBits);
    if (row.cert.kind == CertKind::NotMLogConcave) row.depth = row.cert.m - 1;
  }
  return rows;
}

}  // namespace logcv

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcv/certify.hpp"
#include "logcv/sequence.hpp"

namespace logcv {

/// Coefficients of the product of two polynomials.
Sequence convolution(const Sequence& a, const Sequence& b);

/// Coefficients of p(x)^lambda, lambda >= 1. Integer input runs on the
/// OpenMP kernels; anything else on exact Scalar arithmetic.
Sequence poly_power(const Sequence& p, int lambda);

/// Smallest lambda <= lambda_max with p^lambda m-log-concave. Every lambda is
/// tried in turn: depth is not monotone in lambda.
std::optional<int> min_exponent(const Sequence& p, int m, int lambda_max);

/// Smallest lambda such that p^mu is certified infinitely log-concave for
/// every mu in [lambda, lambda_max].
struct InfinityColumn {
  int lambda = 0;
  std::map<int, Certificate> certificates;  // one per mu in [lambda, lambda_max]
  std::vector<int> isolated;                // certified mu < lambda - 1, cut off by a failure
};

/// Entry-size cap handed to certify_infinite by the sweeps.
inline constexpr std::size_t kSweepMaxBits = std::size_t{1} << 22;

std::optional<InfinityColumn> min_exponent_infty(const Sequence& p, int lambda_max, int max_iter);

/// One row of the minimal exponent table.
struct SweepRow {
  Sequence poly;
  std::vector<std::optional<int>> min_lambda;  // entry m-1 for m = 1..m_max
  std::optional<int> inf_lambda;
  std::map<int, Certificate> inf_certificates;
  std::vector<std::string> findings;  // monotonicity and persistence anomalies
};

/// Every (row, lambda) job runs certify_infinite on p^lambda once; the outcome
/// gives the depth too (NotMLogConcave at m means depth m - 1, a proof means
/// unbounded depth, Unknown after max(max_iter, m_max) steps means at least
/// m_max). Jobs run in parallel and are merged in input order.
std::vector<SweepRow> exponent_table(const std::vector<Sequence>& polys, int m_max,
                                     int lambda_max, int max_iter);

struct ProbeRow {
  int n = 0;
  Certificate cert;
  std::optional<int> depth;  // set when cert found a negative entry
};

/// certify_infinite on p^n for n = 1..n_max.
std::vector<ProbeRow> square_depth_probe(const Sequence& p, int n_max, int max_iter);

}  // namespace logcv

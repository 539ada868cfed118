#pragma once

// Integer kernels behind the power sweeps. Each has a serial reference and an
// OpenMP version; the two must agree exactly.

#include <cstddef>
#include <optional>
#include <vector>

#include "logcv/scalar.hpp"

namespace logcv::kernels {

using IntSeq = std::vector<Integer>;

IntSeq convolve_serial(const IntSeq& a, const IntSeq& b);
IntSeq convolve_parallel(const IntSeq& a, const IntSeq& b);

/// p^lambda by binary powering, lambda >= 1.
IntSeq power_serial(const IntSeq& p, int lambda);
IntSeq power_parallel(const IntSeq& p, int lambda);

/// L with polynomial boundaries: a_{-1} = a_{d+1} = 0.
IntSeq l_operator_serial(const IntSeq& a);
IntSeq l_operator_parallel(const IntSeq& a);

struct IntDepth {
  int depth = 0;
  bool saturated = false;
  std::optional<std::size_t> witness_index;
};

/// Same contract as log_concavity_depth on a polynomial.
IntDepth depth_serial(IntSeq a, int max_m);
IntDepth depth_parallel(IntSeq a, int max_m);

}  // namespace logcv::kernels

#include "logcv/kernels.hpp"

#include <algorithm>

#include "logcv/errors.hpp"

namespace logcv::kernels {

namespace {

// Below this many output entries a parallel region costs more than it saves.
constexpr std::size_t kParallelCutoff = 32;

long ssize(std::size_t n) { return static_cast<long>(n); }

void convolve_entry(const IntSeq& a, const IntSeq& b, std::size_t k, Integer& out) {
  const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  out = 0;
  for (std::size_t i = lo; i <= hi; ++i) mpz_addmul(out.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
}

void l_entry(const IntSeq& a, std::size_t n, Integer& out) {
  out = a[n] * a[n];
  if (n > 0 && n + 1 < a.size()) mpz_submul(out.get_mpz_t(), a[n - 1].get_mpz_t(), a[n + 1].get_mpz_t());
}

std::optional<std::size_t> first_negative(const IntSeq& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) < 0) return i;
  return std::nullopt;
}

template <class Step>
IntSeq power_with(const IntSeq& p, int lambda, Step conv) {
  if (lambda < 1) throw DomainError("exponent must be >= 1");
  IntSeq result, base = p;
  bool have = false;
  for (unsigned e = static_cast<unsigned>(lambda);;) {
    if (e & 1U) {
      result = have ? conv(result, base) : base;
      have = true;
    }
    e >>= 1U;
    if (e == 0) break;
    base = conv(base, base);
  }
  return result;
}

template <class Step>
IntDepth depth_with(IntSeq a, int max_m, Step step) {
  if (max_m < 0) throw DomainError("max_m must be >= 0");
  IntDepth r;
  for (int level = 0; level <= max_m; ++level) {
    if (level > 0) a = step(a);
    if (auto idx = first_negative(a)) {
      r.depth = level - 1;
      r.witness_index = idx;
      return r;
    }
  }
  r.depth = max_m;
  r.saturated = true;
  return r;
}

}  // namespace

IntSeq convolve_serial(const IntSeq& a, const IntSeq& b) {
  if (a.empty() || b.empty()) return {};
  IntSeq out(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) convolve_entry(a, b, k, out[k]);
  return out;
}

IntSeq convolve_parallel(const IntSeq& a, const IntSeq& b) {
  if (a.empty() || b.empty()) return {};
  IntSeq out(a.size() + b.size() - 1);
  const long n = ssize(out.size());
  // middle entries carry the most terms; dynamic scheduling evens that out
#pragma omp parallel for schedule(dynamic, 4) if (out.size() >= kParallelCutoff)
  for (long k = 0; k < n; ++k) convolve_entry(a, b, static_cast<std::size_t>(k), out[static_cast<std::size_t>(k)]);
  return out;
}

IntSeq power_serial(const IntSeq& p, int lambda) { return power_with(p, lambda, convolve_serial); }

IntSeq power_parallel(const IntSeq& p, int lambda) {
  return power_with(p, lambda, convolve_parallel);
}

IntSeq l_operator_serial(const IntSeq& a) {
  IntSeq out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) l_entry(a, n, out[n]);
  return out;
}

IntSeq l_operator_parallel(const IntSeq& a) {
  IntSeq out(a.size());
  const long n = ssize(a.size());
#pragma omp parallel for schedule(static) if (a.size() >= kParallelCutoff)
  for (long i = 0; i < n; ++i) l_entry(a, static_cast<std::size_t>(i), out[static_cast<std::size_t>(i)]);
  return out;
}

IntDepth depth_serial(IntSeq a, int max_m) { return depth_with(std::move(a), max_m, l_operator_serial); }

IntDepth depth_parallel(IntSeq a, int max_m) {
  return depth_with(std::move(a), max_m, l_operator_parallel);
}

}  // namespace logcv::kernels

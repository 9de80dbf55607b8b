#pragma once

#include <cstdint>

#include "corravg/sampled_function.hpp"

namespace corravg {

enum class IntegralMode { Fast, BruteForce };
enum class IntegralKind { Selberg, Modified };

struct IntegralResult {
    double value = 0.0;            // sum of squares, >= 0
    std::int64_t big_n = 0;
    std::int64_t cap_h = 0;
    IntegralMode mode = IntegralMode::Fast;
    IntegralKind kind = IntegralKind::Selberg;
};

// sum_{x < n <= x+H} f(n) for x in (N, 2N], H <= N.
double window_sum(const SampledFunction& f, std::int64_t x, std::int64_t cap_h);

// sum_{|n-x| <= H} (1 - |n-x|/H) f(n), via second-order prefix sums:
// the numerator sum_{h<=H} (P[x+h-1] - P[x-h]) collapses to three lookups
// in Q[k] = sum_{j<=k} P[j], and the single division by H is deferred to
// the end so integer-valued numerators stay exact.
double cesaro_window_sum(const SampledFunction& f, std::int64_t x, std::int64_t cap_h);

// |LHS - RHS| of the Cesaro identity
//   sum_{0<=|n-x|<=H} (1-|n-x|/H) f(n) = (1/H) sum_{h<=H} sum_{0<=|n-x|<h} f(n)
// with the two sides computed by independent code paths (direct weighted
// loop vs prefix-sum h-loop).  Zero up to ~1e-12 * H * sup_norm.
double cesaro_identity_gap(const SampledFunction& f, std::int64_t x, std::int64_t cap_h);

// J_f(N,H) = sum_{x ~ N} |sum_{x<n<=x+H} f(n)|^2 for balanced f.
// Fast mode is O(N) via one prefix-sum array; brute force re-sums each
// window.  Integer-valued f gives bit-equal results in both modes.
IntegralResult selberg_integral(const SampledFunction& f, std::int64_t cap_h,
                                IntegralMode mode = IntegralMode::Fast);

// ~J_f(N,H) = sum_{x ~ N} |sum_n C_H(n-x) f(n)|^2 for balanced f.
IntegralResult modified_selberg_integral(const SampledFunction& f, std::int64_t cap_h,
                                         IntegralMode mode = IntegralMode::Fast);

}  // namespace corravg

#pragma once

#include <cstdint>
#include <vector>

#include "corravg/sampled_function.hpp"

namespace corravg {

enum class TableMode { Direct, Fft };

// Near-diagonal autocorrelation coefficients
//   c'_k = sum_{n,m ~ N, n-m=k} f(n) f(m),   |k| <= max_lag.
// f real makes the table symmetric, so one side is stored; at(k) serves
// both signs.  Differs from the correlation C_f(k) by at most |k| boundary
// pairs (the terms with n-k outside (N, 2N]).
class CorrelationTable {
public:
    CorrelationTable(std::int64_t big_n, std::vector<double> coeffs);

    std::int64_t max_lag() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::int64_t big_n() const { return big_n_; }

    // c'_k for |k| <= max_lag; throws std::out_of_range beyond.
    double at(std::int64_t k) const;

private:
    std::int64_t big_n_;
    std::vector<double> coeffs_;   // index |k|
};

// C_f(h) = sum_{n ~ N} f(n) f(n-h), exact sum over the N integers
// n in (N, 2N].  Requires |h| <= N so n-h stays inside 1..3N.
double correlate(const SampledFunction& f, std::int64_t h);

// Builds c'_k for 0 <= k <= max_lag (max_lag <= N-1).  Direct mode is the
// per-lag double sum; fft mode zero-pads f|(N,2N] into a power-of-two
// buffer >= 2N and uses cyclic autocorrelation (no wraparound aliasing at
// these lags).  For integer-valued f the fft output is rounded to the
// nearest integer, so both modes agree exactly at desk scale.
CorrelationTable near_diag_table(const SampledFunction& f, std::int64_t max_lag,
                                 TableMode mode = TableMode::Direct);

// Deviation of a balanced f:  D_f(N,H) = sum_{h=1}^{H} C_f(h),
// summed in ascending h with each C_f summed in ascending n.
double deviation(const SampledFunction& f, std::int64_t cap_h);

}  // namespace corravg

#pragma once

#include <cstdint>
#include <vector>

namespace corravg::detail {

// Linear autocorrelation r[k] = sum_j g[j] g[j+k] for 0 <= k <= max_lag,
// via FFTW r2c/c2r on a power-of-two buffer >= 2 * g.size(); the padding
// keeps the cyclic product free of wraparound at these lags.
std::vector<double> fft_autocorrelation(const std::vector<double>& g,
                                        std::int64_t max_lag);

}  // namespace corravg::detail

#include "corravg/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "parallel.hpp"

namespace corravg {

CorrelationTable::CorrelationTable(std::int64_t big_n, std::vector<double> coeffs)
    : big_n_(big_n), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CorrelationTable: empty");
}

double CorrelationTable::at(std::int64_t k) const {
    const std::int64_t a = k < 0 ? -k : k;
    if (a > max_lag()) throw std::out_of_range("CorrelationTable::at: |k| > max_lag");
    return coeffs_[static_cast<std::size_t>(a)];
}

double correlate(const SampledFunction& f, std::int64_t h) {
    const std::int64_t n_big = f.big_n();
    if (h > n_big || h < -n_big)
        throw std::out_of_range("correlate: |h| > N");
    double acc = 0.0;
    for (std::int64_t n = n_big + 1; n <= 2 * n_big; ++n)
        acc += f.at(n) * f.at(n - h);
    return acc;
}

CorrelationTable near_diag_table(const SampledFunction& f, std::int64_t max_lag,
                                 TableMode mode) {
    const std::int64_t n_big = f.big_n();
    if (max_lag < 0 || max_lag >= n_big)
        throw std::out_of_range("near_diag_table: need 0 <= max_lag <= N-1");

    std::vector<double> coeffs(static_cast<std::size_t>(max_lag) + 1, 0.0);
    if (mode == TableMode::Direct) {
        detail::parallel_for(max_lag + 1, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t k = lo; k < hi; ++k) {
                double acc = 0.0;
                for (std::int64_t m = n_big + 1; m <= 2 * n_big - k; ++m)
                    acc += f.at(m + k) * f.at(m);
                coeffs[static_cast<std::size_t>(k)] = acc;
            }
        });
    } else {
        std::vector<double> g(static_cast<std::size_t>(n_big));
        for (std::int64_t j = 0; j < n_big; ++j)
            g[static_cast<std::size_t>(j)] = f.at(n_big + 1 + j);
        coeffs = detail::fft_autocorrelation(g, max_lag);
        // Integer-valued input: the exact table is integral and the FFT
        // error at desk scale is far below 1/2, so rounding restores it.
        if (f.integer_valued())
            for (double& c : coeffs) c = std::nearbyint(c);
    }
    return CorrelationTable(n_big, std::move(coeffs));
}

double deviation(const SampledFunction& f, std::int64_t cap_h) {
    if (cap_h < 1 || cap_h > f.big_n())
        throw std::out_of_range("deviation: need 1 <= H <= N");
    double acc = 0.0;
    for (std::int64_t h = 1; h <= cap_h; ++h) acc += correlate(f, h);
    return acc;
}

}  // namespace corravg

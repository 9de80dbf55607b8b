#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace corravg::detail {

namespace {

// FFTW plan creation is not thread-safe; execution of a ready plan is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct FftwBuffer {
    double* data = nullptr;
    explicit FftwBuffer(std::size_t n) : data(fftw_alloc_real(n)) {
        if (!data) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
};

struct FftwComplexBuffer {
    fftw_complex* data = nullptr;
    explicit FftwComplexBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
        if (!data) throw std::bad_alloc();
    }
    ~FftwComplexBuffer() { fftw_free(data); }
    FftwComplexBuffer(const FftwComplexBuffer&) = delete;
    FftwComplexBuffer& operator=(const FftwComplexBuffer&) = delete;
};

}  // namespace

std::vector<double> fft_autocorrelation(const std::vector<double>& g,
                                        std::int64_t max_lag) {
    const std::size_t n = g.size();
    if (n == 0 || max_lag < 0 || static_cast<std::size_t>(max_lag) >= n)
        throw std::invalid_argument("fft_autocorrelation: bad lag range");

    const std::size_t len = next_pow2(2 * n);
    FftwBuffer real(len);
    FftwComplexBuffer spec(len / 2 + 1);

    std::memcpy(real.data, g.data(), n * sizeof(double));
    std::memset(real.data + n, 0, (len - n) * sizeof(double));

    fftw_plan fwd, bwd;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        // FFTW_ESTIMATE keeps planning deterministic and leaves the input intact.
        fwd = fftw_plan_dft_r2c_1d(static_cast<int>(len), real.data, spec.data,
                                   FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(static_cast<int>(len), spec.data, real.data,
                                   FFTW_ESTIMATE);
    }
    fftw_execute(fwd);
    for (std::size_t i = 0; i < len / 2 + 1; ++i) {
        const double re = spec.data[i][0];
        const double im = spec.data[i][1];
        spec.data[i][0] = re * re + im * im;
        spec.data[i][1] = 0.0;
    }
    fftw_execute(bwd);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
    }

    const double scale = 1.0 / static_cast<double>(len);
    std::vector<double> out(static_cast<std::size_t>(max_lag) + 1);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = real.data[k] * scale;
    return out;
}

}  // namespace corravg::detail

#include "corravg/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corravg {

namespace {

void require_positive_h(std::int64_t cap_h, const char* who) {
    if (cap_h < 1) throw std::invalid_argument(std::string(who) + ": H must be >= 1");
}

}  // namespace

Frequency::Frequency(double beta) {
    if (!std::isfinite(beta)) throw std::invalid_argument("Frequency: non-finite");
    beta_ = beta - std::floor(beta);
    if (beta_ >= 1.0) beta_ = 0.0;  // floor rounding at the seam
}

double Frequency::symmetric() const {
    return beta_ < 0.5 ? beta_ : beta_ - 1.0;
}

int unit_step(std::int64_t a, std::int64_t cap_h) {
    require_positive_h(cap_h, "unit_step");
    return (a >= 1 && a <= cap_h) ? 1 : 0;
}

std::int64_t correlation_weight(std::int64_t h, std::int64_t cap_h) {
    require_positive_h(cap_h, "correlation_weight");
    const std::int64_t a = h < 0 ? -h : h;
    return a >= cap_h ? 0 : cap_h - a;
}

std::int64_t cesaro_sq_weight_numerator(std::int64_t h, std::int64_t cap_h) {
    require_positive_h(cap_h, "cesaro_sq_weight");
    const std::int64_t k = h < 0 ? -h : h;
    if (k > 2 * cap_h - 2) return 0;
    // sum_a U_H(a) U_H(a+k); U_H lives on |a| <= H-1
    std::int64_t acc = 0;
    for (std::int64_t a = -(cap_h - 1); a <= cap_h - 1 - k; ++a)
        acc += (cap_h - std::abs(a)) * (cap_h - std::abs(a + k));
    return acc;
}

double cesaro_sq_weight(std::int64_t h, std::int64_t cap_h) {
    return static_cast<double>(cesaro_sq_weight_numerator(h, cap_h)) /
           (static_cast<double>(cap_h) * static_cast<double>(cap_h));
}

double cesaro_weight(double t, std::int64_t cap_h) {
    require_positive_h(cap_h, "cesaro_weight");
    const double v = 1.0 - std::abs(t) / static_cast<double>(cap_h);
    return v > 0.0 ? v : 0.0;
}

std::complex<double> u_hat(Frequency beta, std::int64_t cap_h) {
    require_positive_h(cap_h, "u_hat");
    const double b = beta.value();
    if (b == 0.0) return {static_cast<double>(cap_h), 0.0};
    const double pi = std::numbers::pi;
    const double mag = std::sin(pi * cap_h * b) / std::sin(pi * b);
    const double phase = pi * (cap_h + 1) * b;
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

}  // namespace corravg

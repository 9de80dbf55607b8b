#pragma once

#include <complex>
#include <cstdint>

namespace corravg {

// The combinatorial weights behind the three integral kernels:
//   u_H   unit step on [1,H]
//   U_H   its self-correlation, the triangle max(H-|h|, 0)
//   ~U_H  the normalized self-correlation of the triangle (quartic kernel)
//   C_H   the Cesaro weight max(1-|t|/H, 0) = U_H(t)/H
// plus the exponential sum u^_H(beta) = sum_{h<=H} e(h beta).
// All functions here are pure.

// A frequency in revolutions, e(alpha) = exp(2*pi*i*alpha), reduced mod 1.
class Frequency {
public:
    // Reduces into [0,1); throws std::invalid_argument on non-finite input.
    explicit Frequency(double beta);

    double value() const { return beta_; }        // in [0, 1)
    double symmetric() const;                     // in [-1/2, 1/2)

private:
    double beta_;
};

// 1 iff 1 <= a <= cap_h.
int unit_step(std::int64_t a, std::int64_t cap_h);

// U_H(h) = #{a : u_H(a) u_H(a+h) = 1} = max(cap_h - |h|, 0).
std::int64_t correlation_weight(std::int64_t h, std::int64_t cap_h);

// ~U_H(h) = (1/H^2) sum_a U_H(a) U_H(a+h); support |h| <= 2H-2.
double cesaro_sq_weight(std::int64_t h, std::int64_t cap_h);

// Integer numerator sum_a U_H(a) U_H(a+h); cesaro_sq_weight = this / H^2.
// Exposed so callers can defer the division and keep integer sums exact.
std::int64_t cesaro_sq_weight_numerator(std::int64_t h, std::int64_t cap_h);

// C_H(t) = max(1 - |t|/H, 0).
double cesaro_weight(double t, std::int64_t cap_h);

// u^_H(beta) = sum_{h=1}^{H} e(h beta).  beta integral (reduced to 0)
// returns H by the sum definition; otherwise the closed form
// e(beta (H+1)/2) sin(pi H beta) / sin(pi beta), which is the same finite
// geometric sum evaluated without the removable singularity.
std::complex<double> u_hat(Frequency beta, std::int64_t cap_h);

}  // namespace corravg

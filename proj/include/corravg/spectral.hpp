#pragma once

#include <cstdint>
#include <vector>

#include "corravg/correlation.hpp"
#include "corravg/sampled_function.hpp"

namespace corravg {

// The three integral kernels:
//   UnitStep       u^_H(-beta)          (first generation)
//   Fejer          |u^_H(beta)|^2       (second generation)
//   CesaroSquared  |u^_H(beta)|^4/H^2   (third generation)
// Each is a trigonometric polynomial, so pairing it with |f^|^2 collapses
// the integral over [0,1) by orthogonality into sum_k kappa(k) c'_k.
enum class KernelKind { UnitStep, Fejer, CesaroSquared };

// Fourier coefficients kappa(k) of one kernel, stored as exact integer
// numerators over a common denominator (1, 1, H^2 respectively).
class KernelCoeffs {
public:
    KernelCoeffs(KernelKind kind, std::int64_t cap_h, std::int64_t lag_min,
                 std::int64_t lag_max, std::vector<double> numerators,
                 double denominator);

    KernelKind kind() const { return kind_; }
    std::int64_t cap_h() const { return cap_h_; }
    std::int64_t lag_min() const { return lag_min_; }
    std::int64_t lag_max() const { return lag_max_; }
    double denominator() const { return denominator_; }

    // kappa(k); zero outside [lag_min, lag_max].
    double at(std::int64_t k) const;
    // Integer numerator kappa(k) * denominator.
    double numerator_at(std::int64_t k) const;

private:
    KernelKind kind_;
    std::int64_t cap_h_;
    std::int64_t lag_min_, lag_max_;
    std::vector<double> numerators_;
    double denominator_;
};

// Coefficient sequences:
//   UnitStep       kappa(k) = 1 for 1 <= k <= H (one-sided)
//   Fejer          kappa(k) = U_H(k),  |k| <= H-1
//   CesaroSquared  kappa(k) = ~U_H(k), |k| <= 2H-2
// Masses sum to H, H^2, H^2.
KernelCoeffs kernel_coeffs(KernelKind kind, std::int64_t cap_h);

// int_0^1 |f^(beta)|^2 K(beta) dbeta, evaluated exactly as
// sum_k kappa(k) c'_k (numerators first, one final division).
double main_term(const CorrelationTable& table, std::int64_t cap_h, KernelKind kind);
double main_term(const SampledFunction& f, std::int64_t cap_h, KernelKind kind);

enum class Identity { I, II, III };

const char* to_string(Identity which);

// One verification of a first/second/third generation formula:
// lhs is D_f, J_f or ~J_f; main_term the exact kernel integral; the
// residual realizes the O(H^2 |f|^2) / O(H^3 |f|^2) error terms against
// the fixed budgets 2 H^2 sup^2 and 8 H^3 sup^2.
struct IdentityReport {
    Identity which = Identity::I;
    double lhs = 0.0;
    double main_term = 0.0;
    double residual = 0.0;        // |lhs - main_term|
    double bound = 0.0;           // 2 H^2 sup^2 (I), 8 H^3 sup^2 (II, III)
    double ratio = 0.0;           // residual / bound; 0 when residual == 0
};

IdentityReport verify_identity(const SampledFunction& f, std::int64_t cap_h,
                               Identity which);

// int_{-a}^{a} |f^(alpha)|^2 dalpha for 0 < a <= 1/2, exactly:
//   2a c'_0 + sum_{k != 0} c'_k sin(2 pi k a) / (pi k)
// over the full support |k| < N, summed by ascending |k| with compensated
// summation.  a = 1/2 returns c'_0 (Parseval).  The table overload expects
// max_lag = N-1.
double band_energy(const CorrelationTable& table, double half_width);
double band_energy(const SampledFunction& f, double half_width);

}  // namespace corravg

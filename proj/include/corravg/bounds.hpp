#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "corravg/correlation.hpp"
#include "corravg/sampled_function.hpp"

namespace corravg {

// Variant 1 works with J_f, variant 2 with ~J_f.
enum class TheoremVariant { I, II };

const char* to_string(TheoremVariant variant);

// delta and gamma solving the range-splitting equations:
//   variant 1: delta = 2(1-A)/(3-A), gamma = (1-A)^2/(3-A),   A in [-1,1)
//   variant 2: delta = 2(1-A)/(5-A), gamma = (1-A)^2/(2(5-A)), A in [-3,1)
// Throws std::domain_error naming the admissible interval otherwise.
// Always satisfies 0 < gamma <= delta on the admissible range.
std::pair<double, double> proof_exponents(double a_exp, TheoremVariant variant);

// H_1 = [H^(1-2(1-A)/(3-A))] or H_2 = [H^(1-2(1-A)/(5-A))], integer part.
// >= 1 whenever cap_h >= 1 (the exponent is >= 0 on the admissible range).
std::int64_t theorem_lengths(std::int64_t cap_h, double a_exp, TheoremVariant variant);

// The full exponent bundle for one (A, variant, H).
struct ExponentParams {
    double a_exp = 0.0;
    TheoremVariant variant = TheoremVariant::I;
    double delta = 0.0;
    double gamma = 0.0;
    std::int64_t cap_h = 0;
    std::int64_t derived_length = 0;   // H_1 or H_2
};

ExponentParams exponent_params(double a_exp, TheoremVariant variant, std::int64_t cap_h);

// One check of Gallagher's inequality
//   h^2 int_{-1/(2h)}^{1/(2h)} |f^(alpha)|^2 dalpha  <~  J_f(N,h) + h^3
// (variant 2 with ~J_f).  The N^eps slack is realized as a configurable
// multiplicative threshold, reported alongside the exact ratio.
struct GallagherReport {
    std::int64_t h = 0;
    TheoremVariant variant = TheoremVariant::I;
    double lhs = 0.0;         // h^2 * band_energy(f, 1/(2h))
    double rhs_core = 0.0;    // J (or ~J) + h^3 * sup^2
    double ratio = 0.0;       // lhs / rhs_core; 0 when lhs == 0
    double threshold = 0.0;
    bool within_threshold = true;
};

GallagherReport gallagher_check(const SampledFunction& f, std::int64_t h,
                                TheoremVariant variant, double threshold = 100.0);
// Same, reusing a full-support correlation table (max_lag = N-1).
GallagherReport gallagher_check(const SampledFunction& f, const CorrelationTable& table,
                                std::int64_t h, TheoremVariant variant,
                                double threshold = 100.0);

// Least-squares estimate of A in the hypothesis J_f(N,H) ~ N H^(1+A):
// slope s of log(value/N) against log H, returned as A = s - 1.
// Nonpositive values are excluded pointwise (dropped_points counts them,
// with a warning flag); fewer than 2 usable points with distinct H is an
// error (std::invalid_argument).
struct FitResult {
    double a_exp = 0.0;
    std::size_t points_used = 0;
    std::size_t dropped_points = 0;
    bool dropped_nonpositive = false;
};

FitResult fit_exponent(const std::vector<std::pair<std::int64_t, double>>& points,
                       std::int64_t big_n);

// Diagnostic report for one Theorem instance: the hypothesis quantities at
// H and at the derived length, their ratios to N H^(1+A), and the observed
// conclusion quantity against the Theorem's bound.  No assertion - the
// N^eps slack is unquantified, so this only reports.
struct TheoremReport {
    TheoremVariant variant = TheoremVariant::I;
    double a_exp = 0.0;
    std::int64_t big_n = 0;
    std::int64_t cap_h = 0;
    std::int64_t derived_length = 0;
    double hyp_value_h = 0.0;          // J or ~J at H
    double hyp_scale_h = 0.0;          // N H^(1+A)
    double hyp_ratio_h = 0.0;
    double hyp_value_derived = 0.0;    // J or ~J at H_1 / H_2
    double hyp_scale_derived = 0.0;
    double hyp_ratio_derived = 0.0;
    double conclusion_value = 0.0;     // |D_f| (variant 1) or J_f (variant 2)
    double conclusion_bound = 0.0;     // (N + H^(2-A)) H^(...)
    double conclusion_ratio = 0.0;
};

TheoremReport theorem_report(const SampledFunction& f, std::int64_t cap_h,
                             TheoremVariant variant, double a_exp);

}  // namespace corravg

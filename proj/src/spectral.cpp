#include "corravg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "corravg/kernels.hpp"
#include "corravg/selberg.hpp"

namespace corravg {

KernelCoeffs::KernelCoeffs(KernelKind kind, std::int64_t cap_h, std::int64_t lag_min,
                           std::int64_t lag_max, std::vector<double> numerators,
                           double denominator)
    : kind_(kind),
      cap_h_(cap_h),
      lag_min_(lag_min),
      lag_max_(lag_max),
      numerators_(std::move(numerators)),
      denominator_(denominator) {
    if (numerators_.size() != static_cast<std::size_t>(lag_max_ - lag_min_ + 1))
        throw std::invalid_argument("KernelCoeffs: size mismatch");
}

double KernelCoeffs::numerator_at(std::int64_t k) const {
    if (k < lag_min_ || k > lag_max_) return 0.0;
    return numerators_[static_cast<std::size_t>(k - lag_min_)];
}

double KernelCoeffs::at(std::int64_t k) const { return numerator_at(k) / denominator_; }

KernelCoeffs kernel_coeffs(KernelKind kind, std::int64_t cap_h) {
    if (cap_h < 1) throw std::invalid_argument("kernel_coeffs: H must be >= 1");
    switch (kind) {
        case KernelKind::UnitStep: {
            std::vector<double> num(static_cast<std::size_t>(cap_h), 1.0);
            return {kind, cap_h, 1, cap_h, std::move(num), 1.0};
        }
        case KernelKind::Fejer: {
            const std::int64_t s = cap_h - 1;
            std::vector<double> num(static_cast<std::size_t>(2 * s + 1));
            for (std::int64_t k = -s; k <= s; ++k)
                num[static_cast<std::size_t>(k + s)] =
                    static_cast<double>(correlation_weight(k, cap_h));
            return {kind, cap_h, -s, s, std::move(num), 1.0};
        }
        case KernelKind::CesaroSquared: {
            const std::int64_t s = 2 * cap_h - 2;
            std::vector<double> num(static_cast<std::size_t>(2 * s + 1));
            for (std::int64_t k = -s; k <= s; ++k)
                num[static_cast<std::size_t>(k + s)] =
                    static_cast<double>(cesaro_sq_weight_numerator(k, cap_h));
            return {kind, cap_h, -s, s, std::move(num),
                    static_cast<double>(cap_h) * static_cast<double>(cap_h)};
        }
    }
    throw std::invalid_argument("kernel_coeffs: bad kind");
}

double main_term(const CorrelationTable& table, std::int64_t cap_h, KernelKind kind) {
    const KernelCoeffs kc = kernel_coeffs(kind, cap_h);
    // c'_k vanishes for |k| >= N, so the kernel support may be clamped to
    // the table's full range; anything short of that is a real gap.
    const std::int64_t needed = std::min(kc.lag_max(), table.big_n() - 1);
    if (table.max_lag() < needed)
        throw std::out_of_range("main_term: table max_lag too small for kernel support");
    // Numerators are exact integers, so the single final division is the
    // only inexact step for integer-valued f.
    double acc = 0.0;
    const std::int64_t lo = std::max(kc.lag_min(), -needed);
    for (std::int64_t k = lo; k <= needed; ++k)
        acc += kc.numerator_at(k) * table.at(k);
    return acc / kc.denominator();
}

double main_term(const SampledFunction& f, std::int64_t cap_h, KernelKind kind) {
    if (cap_h < 1 || cap_h > f.big_n())
        throw std::out_of_range("main_term: need 1 <= H <= N");
    const std::int64_t support =
        kind == KernelKind::CesaroSquared ? 2 * cap_h - 2 : cap_h;
    const std::int64_t lag = std::min<std::int64_t>(support, f.big_n() - 1);
    const TableMode mode = f.big_n() > 4096 ? TableMode::Fft : TableMode::Direct;
    return main_term(near_diag_table(f, lag, mode), cap_h, kind);
}

const char* to_string(Identity which) {
    switch (which) {
        case Identity::I: return "I";
        case Identity::II: return "II";
        case Identity::III: return "III";
    }
    return "?";
}

IdentityReport verify_identity(const SampledFunction& f, std::int64_t cap_h,
                               Identity which) {
    if (cap_h < 1 || cap_h > f.big_n())
        throw std::out_of_range("verify_identity: need 1 <= H <= N");
    IdentityReport rep;
    rep.which = which;
    const double sup2 = f.sup_norm() * f.sup_norm();
    const double h = static_cast<double>(cap_h);
    switch (which) {
        case Identity::I:
            rep.lhs = deviation(f, cap_h);
            rep.main_term = corravg::main_term(f, cap_h, KernelKind::UnitStep);
            rep.bound = 2.0 * h * h * sup2;
            break;
        case Identity::II:
            rep.lhs = selberg_integral(f, cap_h).value;
            rep.main_term = corravg::main_term(f, cap_h, KernelKind::Fejer);
            rep.bound = 8.0 * h * h * h * sup2;
            break;
        case Identity::III:
            rep.lhs = modified_selberg_integral(f, cap_h).value;
            rep.main_term = corravg::main_term(f, cap_h, KernelKind::CesaroSquared);
            rep.bound = 8.0 * h * h * h * sup2;
            break;
    }
    rep.residual = std::abs(rep.lhs - rep.main_term);
    rep.ratio = rep.residual == 0.0 ? 0.0 : rep.residual / rep.bound;
    return rep;
}

double band_energy(const CorrelationTable& table, double half_width) {
    if (!(half_width > 0.0) || half_width > 0.5)
        throw std::domain_error("band_energy: half_width must be in (0, 1/2]");
    if (half_width == 0.5) return table.at(0);  // Parseval
    const double pi = std::numbers::pi;
    // Kahan-compensated ascending-|k| sum; the sinc tail alternates.
    double acc = 2.0 * half_width * table.at(0);
    double comp = 0.0;
    for (std::int64_t k = 1; k <= table.max_lag(); ++k) {
        const double term = 2.0 * table.at(k) *
                            std::sin(2.0 * pi * k * half_width) / (pi * k);
        const double y = term - comp;
        const double t = acc + y;
        comp = (t - acc) - y;
        acc = t;
    }
    return acc;
}

double band_energy(const SampledFunction& f, double half_width) {
    const TableMode mode = f.big_n() > 4096 ? TableMode::Fft : TableMode::Direct;
    return band_energy(near_diag_table(f, f.big_n() - 1, mode), half_width);
}

}  // namespace corravg

#include "corravg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "corravg/selberg.hpp"
#include "corravg/spectral.hpp"

namespace corravg {

const char* to_string(TheoremVariant variant) {
    return variant == TheoremVariant::I ? "i" : "ii";
}

namespace {

void require_admissible(double a_exp, TheoremVariant variant) {
    if (!std::isfinite(a_exp)) throw std::domain_error("A must be finite");
    if (variant == TheoremVariant::I) {
        if (a_exp < -1.0 || a_exp >= 1.0)
            throw std::domain_error("variant i requires A in [-1, 1)");
    } else {
        if (a_exp < -3.0 || a_exp >= 1.0)
            throw std::domain_error("variant ii requires A in [-3, 1)");
    }
}

double length_exponent(double a_exp, TheoremVariant variant) {
    const double denom = variant == TheoremVariant::I ? 3.0 - a_exp : 5.0 - a_exp;
    return 1.0 - 2.0 * (1.0 - a_exp) / denom;
}

}  // namespace

std::pair<double, double> proof_exponents(double a_exp, TheoremVariant variant) {
    require_admissible(a_exp, variant);
    const double one_minus = 1.0 - a_exp;
    if (variant == TheoremVariant::I) {
        const double d = 3.0 - a_exp;
        return {2.0 * one_minus / d, one_minus * one_minus / d};
    }
    const double d = 5.0 - a_exp;
    return {2.0 * one_minus / d, one_minus * one_minus / (2.0 * d)};
}

std::int64_t theorem_lengths(std::int64_t cap_h, double a_exp, TheoremVariant variant) {
    if (cap_h < 1) throw std::invalid_argument("theorem_lengths: H must be >= 1");
    require_admissible(a_exp, variant);
    const double t = std::pow(static_cast<double>(cap_h), length_exponent(a_exp, variant));
    // Snap within 1e-9 relative so mathematically-integer powers (H^0,
    // exact roots) survive pow() rounding, then take the integer part.
    const double snapped = std::nearbyint(t);
    std::int64_t value;
    if (std::abs(t - snapped) <= 1e-9 * std::max(1.0, std::abs(t)))
        value = static_cast<std::int64_t>(snapped);
    else
        value = static_cast<std::int64_t>(std::floor(t));
    return std::max<std::int64_t>(1, value);
}

ExponentParams exponent_params(double a_exp, TheoremVariant variant, std::int64_t cap_h) {
    const auto [delta, gamma] = proof_exponents(a_exp, variant);
    ExponentParams p;
    p.a_exp = a_exp;
    p.variant = variant;
    p.delta = delta;
    p.gamma = gamma;
    p.cap_h = cap_h;
    p.derived_length = theorem_lengths(cap_h, a_exp, variant);
    return p;
}

GallagherReport gallagher_check(const SampledFunction& f, const CorrelationTable& table,
                                std::int64_t h, TheoremVariant variant,
                                double threshold) {
    if (h < 1 || h > f.big_n())
        throw std::out_of_range("gallagher_check: need 1 <= h <= N");
    if (!(threshold > 0.0))
        throw std::invalid_argument("gallagher_check: threshold must be positive");
    GallagherReport rep;
    rep.h = h;
    rep.variant = variant;
    rep.threshold = threshold;
    const double hd = static_cast<double>(h);
    rep.lhs = hd * hd * band_energy(table, 0.5 / hd);
    const double integral = variant == TheoremVariant::I
                                ? selberg_integral(f, h).value
                                : modified_selberg_integral(f, h).value;
    rep.rhs_core = integral + hd * hd * hd * f.sup_norm() * f.sup_norm();
    rep.ratio = rep.lhs == 0.0 ? 0.0 : rep.lhs / rep.rhs_core;
    rep.within_threshold = rep.ratio <= threshold;
    return rep;
}

GallagherReport gallagher_check(const SampledFunction& f, std::int64_t h,
                                TheoremVariant variant, double threshold) {
    const TableMode mode = f.big_n() > 4096 ? TableMode::Fft : TableMode::Direct;
    return gallagher_check(f, near_diag_table(f, f.big_n() - 1, mode), h, variant,
                           threshold);
}

FitResult fit_exponent(const std::vector<std::pair<std::int64_t, double>>& points,
                       std::int64_t big_n) {
    if (big_n < 1) throw std::invalid_argument("fit_exponent: N must be >= 1");
    FitResult res;
    std::vector<std::pair<double, double>> usable;  // (log H, log(value/N))
    for (const auto& [h, value] : points) {
        if (h < 1) throw std::invalid_argument("fit_exponent: H must be >= 1");
        if (!(value > 0.0)) {
            ++res.dropped_points;
            res.dropped_nonpositive = true;
            continue;
        }
        usable.emplace_back(std::log(static_cast<double>(h)),
                            std::log(value / static_cast<double>(big_n)));
    }
    res.points_used = usable.size();
    if (usable.size() < 2)
        throw std::invalid_argument("fit_exponent: need >= 2 points with positive values");

    double sx = 0.0, sy = 0.0;
    for (const auto& [x, y] : usable) {
        sx += x;
        sy += y;
    }
    const double mx = sx / usable.size(), my = sy / usable.size();
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : usable) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_exponent: need >= 2 distinct H values");
    res.a_exp = sxy / sxx - 1.0;
    return res;
}

TheoremReport theorem_report(const SampledFunction& f, std::int64_t cap_h,
                             TheoremVariant variant, double a_exp) {
    require_admissible(a_exp, variant);
    if (cap_h < 1 || cap_h > f.big_n())
        throw std::out_of_range("theorem_report: need 1 <= H <= N");

    TheoremReport rep;
    rep.variant = variant;
    rep.a_exp = a_exp;
    rep.big_n = f.big_n();
    rep.cap_h = cap_h;
    rep.derived_length = theorem_lengths(cap_h, a_exp, variant);

    const auto hyp_integral = [&](std::int64_t len) {
        return variant == TheoremVariant::I
                   ? selberg_integral(f, len).value
                   : modified_selberg_integral(f, len).value;
    };
    const auto hyp_scale = [&](std::int64_t len) {
        return static_cast<double>(f.big_n()) *
               std::pow(static_cast<double>(len), 1.0 + a_exp);
    };

    rep.hyp_value_h = hyp_integral(cap_h);
    rep.hyp_scale_h = hyp_scale(cap_h);
    rep.hyp_ratio_h = rep.hyp_value_h == 0.0 ? 0.0 : rep.hyp_value_h / rep.hyp_scale_h;
    rep.hyp_value_derived = hyp_integral(rep.derived_length);
    rep.hyp_scale_derived = hyp_scale(rep.derived_length);
    rep.hyp_ratio_derived =
        rep.hyp_value_derived == 0.0 ? 0.0 : rep.hyp_value_derived / rep.hyp_scale_derived;

    const double hd = static_cast<double>(cap_h);
    const double nd = static_cast<double>(f.big_n());
    if (variant == TheoremVariant::I) {
        rep.conclusion_value = std::abs(deviation(f, cap_h));
        rep.conclusion_bound =
            (nd + std::pow(hd, 2.0 - a_exp)) * std::pow(hd, length_exponent(a_exp, variant));
    } else {
        rep.conclusion_value = selberg_integral(f, cap_h).value;
        rep.conclusion_bound =
            (nd + std::pow(hd, 2.0 - a_exp)) *
            std::pow(hd, 2.0 - 4.0 * (1.0 - a_exp) / (5.0 - a_exp));
    }
    rep.conclusion_ratio =
        rep.conclusion_value == 0.0 ? 0.0 : rep.conclusion_value / rep.conclusion_bound;
    return rep;
}

}  // namespace corravg

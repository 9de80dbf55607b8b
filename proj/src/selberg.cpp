#include "corravg/selberg.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace corravg {

namespace {

void require_window(const SampledFunction& f, std::int64_t x, std::int64_t cap_h,
                    const char* who) {
    const std::int64_t n_big = f.big_n();
    if (cap_h < 1 || cap_h > n_big)
        throw std::out_of_range(std::string(who) + ": need 1 <= H <= N");
    if (x <= n_big || x > 2 * n_big)
        throw std::out_of_range(std::string(who) + ": x outside (N, 2N]");
}

void require_h(const SampledFunction& f, std::int64_t cap_h, const char* who) {
    if (cap_h < 1 || cap_h > f.big_n())
        throw std::out_of_range(std::string(who) + ": need 1 <= H <= N");
}

// P[j] = sum_{n<=j} f(n), j in [0, 3N].
std::vector<double> prefix_sums(const SampledFunction& f) {
    std::vector<double> p(static_cast<std::size_t>(f.n_max()) + 1);
    p[0] = 0.0;
    for (std::int64_t n = 1; n <= f.n_max(); ++n)
        p[static_cast<std::size_t>(n)] = p[static_cast<std::size_t>(n - 1)] + f.at(n);
    return p;
}

// Q[j] = sum_{i<=j} P[i].
std::vector<double> prefix_prefix_sums(const std::vector<double>& p) {
    std::vector<double> q(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    return q;
}

// Cesaro window numerator sum_{h<=H} (P[x+h-1] - P[x-h]); the telescoped
// form of H * sum_{|n-x|<=H} (1-|n-x|/H) f(n).
double cesaro_numerator(const std::vector<double>& q, std::int64_t x, std::int64_t cap_h) {
    const auto qi = [&q](std::int64_t j) { return q[static_cast<std::size_t>(j)]; };
    return qi(x + cap_h - 1) - 2.0 * qi(x - 1) + qi(x - cap_h - 1);
}

}  // namespace

double window_sum(const SampledFunction& f, std::int64_t x, std::int64_t cap_h) {
    require_window(f, x, cap_h, "window_sum");
    double acc = 0.0;
    for (std::int64_t n = x + 1; n <= x + cap_h; ++n) acc += f.at(n);
    return acc;
}

double cesaro_window_sum(const SampledFunction& f, std::int64_t x, std::int64_t cap_h) {
    require_window(f, x, cap_h, "cesaro_window_sum");
    const auto p = prefix_sums(f);
    const auto q = prefix_prefix_sums(p);
    return cesaro_numerator(q, x, cap_h) / static_cast<double>(cap_h);
}

double cesaro_identity_gap(const SampledFunction& f, std::int64_t x, std::int64_t cap_h) {
    require_window(f, x, cap_h, "cesaro_identity_gap");
    // LHS: literal weighted sum with C_H weights.
    double lhs = 0.0;
    for (std::int64_t t = -cap_h; t <= cap_h; ++t)
        lhs += (1.0 - std::abs(static_cast<double>(t)) / static_cast<double>(cap_h)) *
               f.at(x + t);
    // RHS: (1/H) sum_{h<=H} sum_{0<=|n-x|<h} f(n), inner sums via prefixes.
    const auto p = prefix_sums(f);
    double rhs = 0.0;
    for (std::int64_t h = 1; h <= cap_h; ++h)
        rhs += p[static_cast<std::size_t>(x + h - 1)] - p[static_cast<std::size_t>(x - h)];
    rhs /= static_cast<double>(cap_h);
    return std::abs(lhs - rhs);
}

IntegralResult selberg_integral(const SampledFunction& f, std::int64_t cap_h,
                                IntegralMode mode) {
    require_h(f, cap_h, "selberg_integral");
    const std::int64_t n_big = f.big_n();
    double acc = 0.0;
    if (mode == IntegralMode::Fast) {
        const auto p = prefix_sums(f);
        for (std::int64_t x = n_big + 1; x <= 2 * n_big; ++x) {
            const double w = p[static_cast<std::size_t>(x + cap_h)] -
                             p[static_cast<std::size_t>(x)];
            acc += w * w;
        }
    } else {
        for (std::int64_t x = n_big + 1; x <= 2 * n_big; ++x) {
            double w = 0.0;
            for (std::int64_t n = x + 1; n <= x + cap_h; ++n) w += f.at(n);
            acc += w * w;
        }
    }
    return {acc, n_big, cap_h, mode, IntegralKind::Selberg};
}

IntegralResult modified_selberg_integral(const SampledFunction& f, std::int64_t cap_h,
                                         IntegralMode mode) {
    require_h(f, cap_h, "modified_selberg_integral");
    const std::int64_t n_big = f.big_n();
    double acc = 0.0;
    if (mode == IntegralMode::Fast) {
        const auto p = prefix_sums(f);
        const auto q = prefix_prefix_sums(p);
        for (std::int64_t x = n_big + 1; x <= 2 * n_big; ++x) {
            const double w = cesaro_numerator(q, x, cap_h) / static_cast<double>(cap_h);
            acc += w * w;
        }
    } else {
        // Integer weights (H - |t|) keep the numerator exact for
        // integer-valued f; one division by H per window, as in fast mode.
        for (std::int64_t x = n_big + 1; x <= 2 * n_big; ++x) {
            double num = 0.0;
            for (std::int64_t t = -(cap_h - 1); t <= cap_h - 1; ++t)
                num += static_cast<double>(cap_h - std::abs(t)) * f.at(x + t);
            const double w = num / static_cast<double>(cap_h);
            acc += w * w;
        }
    }
    return {acc, n_big, cap_h, mode, IntegralKind::Modified};
}

}  // namespace corravg

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "corravg/bounds.hpp"
#include "corravg/selberg.hpp"

using corravg::FunctionKind;
using corravg::TheoremVariant;

TEST_CASE("proof exponents: frozen values and admissible ranges") {
    const auto [d1, g1] = corravg::proof_exponents(0.0, TheoremVariant::I);
    CHECK(d1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(g1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

    const auto [d2, g2] = corravg::proof_exponents(0.0, TheoremVariant::II);
    CHECK(d2 == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(g2 == doctest::Approx(0.1).epsilon(1e-15));

    const auto [d3, g3] = corravg::proof_exponents(-1.0, TheoremVariant::I);
    CHECK(d3 == 1.0);
    CHECK(g3 == 1.0);

    // 0 < gamma <= delta across both admissible ranges.
    for (int j = 0; j < 400; ++j) {
        const double a1 = -1.0 + 1.999 * j / 399.0;  // [-1, 0.999)
        const auto [dd, gg] = corravg::proof_exponents(a1, TheoremVariant::I);
        CHECK(gg > 0.0);
        CHECK(gg <= dd);

        const double a2 = -3.0 + 3.999 * j / 399.0;  // [-3, 0.999)
        const auto [dd2, gg2] = corravg::proof_exponents(a2, TheoremVariant::II);
        CHECK(gg2 > 0.0);
        CHECK(gg2 <= dd2);
    }

    CHECK_THROWS_WITH_AS(corravg::proof_exponents(-1.001, TheoremVariant::I),
                         doctest::Contains("[-1, 1)"), std::domain_error);
    CHECK_THROWS_AS(corravg::proof_exponents(1.0, TheoremVariant::I),
                    std::domain_error);
    CHECK_THROWS_WITH_AS(corravg::proof_exponents(-3.001, TheoremVariant::II),
                         doctest::Contains("[-3, 1)"), std::domain_error);
    CHECK_THROWS_AS(corravg::proof_exponents(1.0, TheoremVariant::II),
                    std::domain_error);
    CHECK_THROWS_AS(corravg::proof_exponents(0.0 / 0.0, TheoremVariant::I),
                    std::domain_error);
}

TEST_CASE("derived lengths: frozen values, floor semantics, snapping") {
    CHECK(corravg::theorem_lengths(10000, 0.0, TheoremVariant::I) == 21);
    CHECK(corravg::theorem_lengths(10000, -1.0, TheoremVariant::I) == 1);
    CHECK(corravg::theorem_lengths(10000, 0.0, TheoremVariant::II) == 251);

    // 512^(1/3) = 8 exactly in the reals; pow() noise must not drop it to 7.
    CHECK(corravg::theorem_lengths(512, 0.0, TheoremVariant::I) == 8);
    CHECK(corravg::theorem_lengths(1, 0.5, TheoremVariant::I) == 1);

    // Exponent is >= 0 on the admissible range, so lengths stay >= 1 and
    // grow with H.
    for (double a : {-1.0, -0.5, 0.0, 0.5, 0.9}) {
        std::int64_t prev = 0;
        for (std::int64_t cap_h : {1, 10, 100, 1000, 10000}) {
            const auto len = corravg::theorem_lengths(cap_h, a, TheoremVariant::I);
            CHECK(len >= 1);
            CHECK(len <= cap_h);
            CHECK(len >= prev);
            prev = len;
        }
    }
    CHECK_THROWS_AS(corravg::theorem_lengths(0, 0.0, TheoremVariant::I),
                    std::invalid_argument);
    CHECK_THROWS_AS(corravg::theorem_lengths(100, 1.5, TheoremVariant::II),
                    std::domain_error);
}

TEST_CASE("exponent_params bundles the pieces") {
    const auto p = corravg::exponent_params(0.0, TheoremVariant::II, 10000);
    CHECK(p.a_exp == 0.0);
    CHECK(p.variant == TheoremVariant::II);
    CHECK(p.delta == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(p.gamma == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(p.cap_h == 10000);
    CHECK(p.derived_length == 251);
}

TEST_CASE("gallagher check: parity anchor and report invariants") {
    const auto f = corravg::generate(FunctionKind::Parity, 100);
    const auto rep = corravg::gallagher_check(f, 1, TheoremVariant::I, 1.5);
    CHECK(rep.lhs == 100.0);
    CHECK(rep.rhs_core == 101.0);
    CHECK(rep.ratio == 100.0 / 101.0);
    CHECK(rep.threshold == 1.5);
    CHECK(rep.within_threshold);
    CHECK(rep.h == 1);

    const auto tight = corravg::gallagher_check(f, 1, TheoremVariant::I, 1e-6);
    CHECK_FALSE(tight.within_threshold);

    const auto mu = corravg::generate(FunctionKind::Moebius, 200);
    const auto table = corravg::near_diag_table(mu, 199);
    for (std::int64_t h : {1, 2, 5, 10}) {
        for (auto variant : {TheoremVariant::I, TheoremVariant::II}) {
            const auto r = corravg::gallagher_check(mu, table, h, variant, 1.5);
            CHECK(r.lhs >= 0.0);
            CHECK(r.rhs_core > 0.0);
            CHECK(r.ratio == r.lhs / r.rhs_core);
            CHECK(std::isfinite(r.ratio));
            // same answer without the prebuilt table
            const auto r2 = corravg::gallagher_check(mu, h, variant, 1.5);
            CHECK(r2.lhs == r.lhs);
            CHECK(r2.rhs_core == r.rhs_core);
        }
    }

    CHECK_THROWS_AS(corravg::gallagher_check(f, 0, TheoremVariant::I),
                    std::out_of_range);
    CHECK_THROWS_AS(corravg::gallagher_check(f, 101, TheoremVariant::I),
                    std::out_of_range);
    CHECK_THROWS_AS(corravg::gallagher_check(f, 1, TheoremVariant::I, 0.0),
                    std::invalid_argument);
}

TEST_CASE("fit_exponent recovers planted exponents exactly") {
    for (double planted : {-1.0, 0.0, 0.5}) {
        std::vector<std::pair<std::int64_t, double>> points;
        for (std::int64_t cap_h : {2, 4, 8, 16, 32, 64})
            points.emplace_back(
                cap_h, 1000.0 * std::pow(static_cast<double>(cap_h), 1.0 + planted));
        const auto fit = corravg::fit_exponent(points, 1000);
        CHECK(fit.a_exp == doctest::Approx(planted).epsilon(1e-9));
        CHECK(fit.points_used == 6);
        CHECK(fit.dropped_points == 0);
        CHECK_FALSE(fit.dropped_nonpositive);
    }
}

TEST_CASE("fit_exponent drops nonpositive samples and flags degeneracy") {
    std::vector<std::pair<std::int64_t, double>> points = {
        {2, 8.0}, {3, 0.0}, {4, 16.0}, {5, -2.0}, {8, 32.0}};
    const auto fit = corravg::fit_exponent(points, 1000);  // value = 4H -> A = 0
    CHECK(fit.a_exp == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.points_used == 3);
    CHECK(fit.dropped_points == 2);
    CHECK(fit.dropped_nonpositive);

    CHECK_THROWS_AS(corravg::fit_exponent({{2, 0.0}, {4, 0.0}}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(corravg::fit_exponent({{2, 5.0}}, 10), std::invalid_argument);
    CHECK_THROWS_AS(corravg::fit_exponent({{4, 5.0}, {4, 9.0}}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(corravg::fit_exponent({{0, 5.0}, {4, 9.0}}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(corravg::fit_exponent({{2, 5.0}, {4, 9.0}}, 0),
                    std::invalid_argument);
}

TEST_CASE("theorem report: parity anchor and determinism") {
    const auto f = corravg::generate(FunctionKind::Parity, 100);
    const auto rep = corravg::theorem_report(f, 31, TheoremVariant::I, -1.0);
    CHECK(rep.variant == TheoremVariant::I);
    CHECK(rep.big_n == 100);
    CHECK(rep.cap_h == 31);
    CHECK(rep.derived_length == 1);  // H^(1 - 2(1-A)/(3-A)) = H^0
    CHECK(rep.conclusion_value == 100.0);
    CHECK(rep.conclusion_bound == doctest::Approx(29891.0).epsilon(1e-12));
    CHECK(rep.conclusion_ratio == doctest::Approx(100.0 / 29891.0).epsilon(1e-12));
    CHECK(rep.hyp_value_h == 100.0);  // J_f(N, 31), odd H
    CHECK(rep.hyp_scale_h == 100.0);  // N H^(1+A) = N
    CHECK(rep.hyp_ratio_h == 1.0);

    const auto again = corravg::theorem_report(f, 31, TheoremVariant::I, -1.0);
    CHECK(again.conclusion_ratio == rep.conclusion_ratio);
    CHECK(again.hyp_value_derived == rep.hyp_value_derived);
    CHECK(again.hyp_scale_derived == rep.hyp_scale_derived);

    const auto rep2 = corravg::theorem_report(f, 31, TheoremVariant::II, 0.0);
    CHECK(rep2.conclusion_value == corravg::selberg_integral(f, 31).value);
    CHECK(rep2.derived_length == corravg::theorem_lengths(31, 0.0, TheoremVariant::II));
    CHECK(rep2.conclusion_bound > 0.0);

    CHECK_THROWS_AS(corravg::theorem_report(f, 0, TheoremVariant::I, 0.0),
                    std::out_of_range);
    CHECK_THROWS_AS(corravg::theorem_report(f, 101, TheoremVariant::I, 0.0),
                    std::out_of_range);
    CHECK_THROWS_AS(corravg::theorem_report(f, 31, TheoremVariant::I, 2.0),
                    std::domain_error);
    CHECK(std::string(corravg::to_string(TheoremVariant::I)) == "i");
    CHECK(std::string(corravg::to_string(TheoremVariant::II)) == "ii");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corravg/sampled_function.hpp"
#include "oracles.hpp"

using corravg::FormatError;
using corravg::FunctionKind;
using corravg::SampledFunction;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "tmp_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("constructor validates its inputs") {
    CHECK_THROWS_AS(SampledFunction(0, {}, "empty"), std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction(2, {1.0, -1.0}, "short"), std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction(1, {1.0, 0.0 / 0.0, 1.0}, "nan"),
                    std::invalid_argument);
    CHECK_THROWS_AS(SampledFunction(1, {1.0, 1.0 / 0.0, 1.0}, "inf"),
                    std::invalid_argument);

    const SampledFunction f(2, {1.0, -1.0, 0.5, 0.0, -2.5, 1.0}, "manual");
    CHECK(f.big_n() == 2);
    CHECK(f.n_max() == 6);
    CHECK(f.at(1) == 1.0);
    CHECK(f.at(5) == -2.5);
    CHECK(f.sup_norm() == 2.5);
    CHECK(f.label() == "manual");
    CHECK_FALSE(f.integer_valued());
    CHECK(SampledFunction(1, {3.0, -2.0, 0.0}, "ints").integer_valued());
}

TEST_CASE("parity alternates starting at +1") {
    const auto f = corravg::generate(FunctionKind::Parity, 4);
    REQUIRE(f.n_max() == 12);
    for (std::int64_t n = 1; n <= f.n_max(); ++n)
        CHECK(f.at(n) == (n % 2 == 1 ? 1.0 : -1.0));
    CHECK(f.sup_norm() == 1.0);
    CHECK(f.integer_valued());
    CHECK(f.label() == "parity");
}

TEST_CASE("liouville matches trial division") {
    const auto f = corravg::generate(FunctionKind::Liouville, 400);
    for (std::int64_t n = 1; n <= f.n_max(); ++n)
        CHECK(f.at(n) == static_cast<double>(oracles::lambda_trial(n)));

    const double first8[] = {1, -1, -1, 1, -1, 1, -1, -1};
    for (int n = 1; n <= 8; ++n) CHECK(f.at(n) == first8[n - 1]);
}

TEST_CASE("moebius matches trial division") {
    const auto f = corravg::generate(FunctionKind::Moebius, 400);
    for (std::int64_t n = 1; n <= f.n_max(); ++n)
        CHECK(f.at(n) == static_cast<double>(oracles::mu_trial(n)));

    const double first8[] = {1, -1, -1, 0, -1, 1, -1, 0};
    for (int n = 1; n <= 8; ++n) CHECK(f.at(n) == first8[n - 1]);
}

TEST_CASE("rademacher is a seeded +-1 sequence") {
    const auto f = corravg::generate(FunctionKind::Rademacher, 100, 42);
    CHECK(f.label() == "rademacher:42");
    int plus = 0;
    for (std::int64_t n = 1; n <= f.n_max(); ++n) {
        CHECK((f.at(n) == 1.0 || f.at(n) == -1.0));
        plus += f.at(n) == 1.0;
    }
    CHECK(plus > 0);
    CHECK(plus < f.n_max());

    const auto again = corravg::generate(FunctionKind::Rademacher, 100, 42);
    for (std::int64_t n = 1; n <= f.n_max(); ++n) CHECK(f.at(n) == again.at(n));

    const auto other = corravg::generate(FunctionKind::Rademacher, 100, 43);
    bool differs = false;
    for (std::int64_t n = 1; n <= f.n_max(); ++n) differs |= f.at(n) != other.at(n);
    CHECK(differs);

    CHECK_THROWS_AS(corravg::generate(FunctionKind::Rademacher, 100),
                    std::invalid_argument);
}

TEST_CASE("kind names round-trip") {
    for (auto kind : {FunctionKind::Parity, FunctionKind::Liouville,
                      FunctionKind::Moebius, FunctionKind::Rademacher})
        CHECK(corravg::parse_function_kind(corravg::to_string(kind)) == kind);
    CHECK_THROWS_AS(corravg::parse_function_kind("mertens"), std::invalid_argument);
    CHECK_THROWS_AS(corravg::generate(FunctionKind::Parity, 0), std::invalid_argument);
}

TEST_CASE("save/load round-trips a generated family") {
    const auto f = corravg::generate(FunctionKind::Parity, 2);
    std::ostringstream buf;
    corravg::save(f, buf);
    CHECK(buf.str() == "n,value\n1,1\n2,-1\n3,1\n4,-1\n5,1\n6,-1\n");

    const auto path = write_temp("roundtrip.csv", buf.str());
    const auto g = corravg::load(path);
    CHECK(g.big_n() == f.big_n());
    for (std::int64_t n = 1; n <= f.n_max(); ++n) CHECK(g.at(n) == f.at(n));
    CHECK(g.label() == path);
    std::remove(path.c_str());
}

TEST_CASE("load survives CRLF line endings and fractional values") {
    const auto path =
        write_temp("crlf.csv", "n,value\r\n1,0.25\r\n2,-0.5\r\n3,1e-3\r\n");
    const auto f = corravg::load(path);
    CHECK(f.big_n() == 1);
    CHECK(f.at(1) == 0.25);
    CHECK(f.at(2) == -0.5);
    CHECK(f.at(3) == 1e-3);
    CHECK_FALSE(f.integer_valued());
    std::remove(path.c_str());
}

TEST_CASE("load rejects malformed files with the offending row") {
    using Catch = FormatError;

    CHECK_THROWS_AS(corravg::load("does_not_exist.csv"), Catch);

    struct Bad {
        const char* name;
        const char* content;
        const char* needle;
    };
    const Bad cases[] = {
        {"badheader.csv", "index,value\n1,1\n2,1\n3,1\n", "header"},
        {"noheaderrows.csv", "n,value\n", "no rows"},
        {"badindex.csv", "n,value\n1,1\n3,1\n2,1\n", "row 3"},
        {"nocomma.csv", "n,value\n1;1\n", "row 2"},
        {"badvalue.csv", "n,value\n1,one\n", "row 2"},
        {"nanvalue.csv", "n,value\n1,nan\n2,1\n3,1\n", "row 2"},
        {"notriple.csv", "n,value\n1,1\n2,1\n3,1\n4,1\n", "multiple of 3"},
    };
    for (const auto& c : cases) {
        const auto path = write_temp(c.name, c.content);
        CHECK_THROWS_WITH_AS(corravg::load(path), doctest::Contains(c.needle), Catch);
        std::remove(path.c_str());
    }
}

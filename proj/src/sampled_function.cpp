#include "corravg/sampled_function.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

namespace corravg {

namespace {

bool all_integers(const std::vector<double>& v) {
    for (double x : v)
        if (x != std::trunc(x)) return false;
    return true;
}

// Linear sieve filling mu and lambda on 1..limit in O(limit).
// mu(p*i) = -mu(i) for p coprime to i, 0 when p | i;
// lambda(p*i) = -lambda(i) in both branches (Omega is fully additive).
void sieve_mu_lambda(std::int64_t limit, std::vector<signed char>& mu,
                     std::vector<signed char>& lam) {
    mu.assign(static_cast<std::size_t>(limit) + 1, 0);
    lam.assign(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    mu[1] = 1;
    lam[1] = 1;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
            lam[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (p > limit / i) break;
            const std::size_t ip = static_cast<std::size_t>(i * p);
            composite[ip] = true;
            lam[ip] = static_cast<signed char>(-lam[static_cast<std::size_t>(i)]);
            if (i % p == 0) {
                mu[ip] = 0;
                break;
            }
            mu[ip] = static_cast<signed char>(-mu[static_cast<std::size_t>(i)]);
        }
    }
}

}  // namespace

SampledFunction::SampledFunction(std::int64_t big_n, std::vector<double> values,
                                 std::string label)
    : big_n_(big_n), label_(std::move(label)) {
    if (big_n_ < 1) throw std::invalid_argument("SampledFunction: N must be >= 1");
    const std::size_t expected = static_cast<std::size_t>(3 * big_n_);
    if (values.size() != expected)
        throw std::invalid_argument("SampledFunction: need exactly 3N values");
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("SampledFunction: non-finite value");
    values_.resize(expected + 1);
    values_[0] = 0.0;  // sentinel, samples are 1-based
    std::copy(values.begin(), values.end(), values_.begin() + 1);
    sup_norm_ = 0.0;
    for (std::size_t i = 1; i < values_.size(); ++i)
        sup_norm_ = std::max(sup_norm_, std::abs(values_[i]));
    integer_valued_ = all_integers(values);
}

const char* to_string(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::Parity: return "parity";
        case FunctionKind::Liouville: return "liouville";
        case FunctionKind::Moebius: return "moebius";
        case FunctionKind::Rademacher: return "rademacher";
    }
    return "?";
}

FunctionKind parse_function_kind(const std::string& name) {
    if (name == "parity") return FunctionKind::Parity;
    if (name == "liouville") return FunctionKind::Liouville;
    if (name == "moebius") return FunctionKind::Moebius;
    if (name == "rademacher") return FunctionKind::Rademacher;
    throw std::invalid_argument("unknown function kind: " + name);
}

SampledFunction generate(FunctionKind kind, std::int64_t big_n,
                         std::optional<std::uint64_t> seed) {
    if (big_n < 1) throw std::invalid_argument("generate: N must be >= 1");
    if (kind == FunctionKind::Rademacher && !seed)
        throw std::invalid_argument("generate: rademacher requires a seed");

    const std::int64_t n_max = 3 * big_n;
    std::vector<double> values(static_cast<std::size_t>(n_max));
    std::string label = to_string(kind);

    switch (kind) {
        case FunctionKind::Parity:
            for (std::int64_t n = 1; n <= n_max; ++n)
                values[static_cast<std::size_t>(n - 1)] = (n % 2 == 1) ? 1.0 : -1.0;
            break;
        case FunctionKind::Liouville:
        case FunctionKind::Moebius: {
            std::vector<signed char> mu, lam;
            sieve_mu_lambda(n_max, mu, lam);
            const auto& src = (kind == FunctionKind::Moebius) ? mu : lam;
            for (std::int64_t n = 1; n <= n_max; ++n)
                values[static_cast<std::size_t>(n - 1)] =
                    static_cast<double>(src[static_cast<std::size_t>(n)]);
            break;
        }
        case FunctionKind::Rademacher: {
            // mt19937_64 output is pinned by the standard, so equal seeds
            // reproduce the array on any platform.
            std::mt19937_64 rng(*seed);
            for (auto& v : values) v = (rng() >> 63) ? 1.0 : -1.0;
            label += ":" + std::to_string(*seed);
            break;
        }
    }
    return SampledFunction(big_n, std::move(values), std::move(label));
}

namespace {

[[noreturn]] void bad_row(std::size_t row, const std::string& what) {
    throw FormatError("function file row " + std::to_string(row) + ": " + what);
}

}  // namespace

SampledFunction load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open function file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty function file: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,value")
        throw FormatError("function file header must be \"n,value\", got \"" + line + "\"");

    std::vector<double> values;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) bad_row(row, "empty row");
        const auto comma = line.find(',');
        if (comma == std::string::npos) bad_row(row, "missing comma");

        std::int64_t n = 0;
        const char* nb = line.data();
        auto nr = std::from_chars(nb, nb + comma, n);
        if (nr.ec != std::errc{} || nr.ptr != nb + comma) bad_row(row, "bad index");
        if (n != static_cast<std::int64_t>(row) - 1)
            bad_row(row, "index " + std::to_string(n) + " out of order (expected " +
                             std::to_string(row - 1) + ")");

        double v = 0.0;
        const char* vb = line.data() + comma + 1;
        const char* ve = line.data() + line.size();
        auto vr = std::from_chars(vb, ve, v);
        if (vr.ec != std::errc{} || vr.ptr != ve) bad_row(row, "bad value");
        if (!std::isfinite(v)) bad_row(row, "non-finite value");
        values.push_back(v);
    }
    if (values.empty()) throw FormatError("function file has no rows: " + path);
    if (values.size() % 3 != 0)
        throw FormatError("function file length " + std::to_string(values.size()) +
                          " is not a multiple of 3 (need n_max = 3N)");
    const auto big_n = static_cast<std::int64_t>(values.size()) / 3;
    return SampledFunction(big_n, std::move(values), path);
}

void save(const SampledFunction& f, std::ostream& out) {
    out << "n,value\n";
    char buf[40];
    for (std::int64_t n = 1; n <= f.n_max(); ++n) {
        std::snprintf(buf, sizeof(buf), "%.12g", f.at(n));
        out << n << ',' << buf << '\n';
    }
}

}  // namespace corravg

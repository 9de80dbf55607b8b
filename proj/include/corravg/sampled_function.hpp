#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corravg {

// A real arithmetic function sampled on 1..3N.  The dyadic block (N, 2N]
// is where correlations and window sums live; the outer thirds absorb the
// shifts n-h and the window overhangs x+H, so no index ever leaves the
// sample.  Immutable after construction and safe to share across threads.
class SampledFunction {
public:
    // `values[i]` holds f(i+1) for i in [0, 3*big_n).  Throws
    // std::invalid_argument on big_n == 0, a length mismatch, or any
    // non-finite entry.
    SampledFunction(std::int64_t big_n, std::vector<double> values,
                    std::string label);

    std::int64_t big_n() const { return big_n_; }
    std::int64_t n_max() const { return 3 * big_n_; }

    // 1-based sample access, n in [1, n_max].
    double at(std::int64_t n) const { return values_[static_cast<std::size_t>(n)]; }

    // max_{1<=n<=3N} |f(n)|, recomputed from the values at construction.
    double sup_norm() const { return sup_norm_; }

    const std::string& label() const { return label_; }

    // True when every sample is an exact integer; downstream sums are then
    // exactly representable in doubles at desk scale (|sums| < 2^53).
    bool integer_valued() const { return integer_valued_; }

private:
    std::int64_t big_n_;
    std::vector<double> values_;   // index 0 is an unused sentinel
    double sup_norm_;
    std::string label_;
    bool integer_valued_;
};

enum class FunctionKind { Parity, Liouville, Moebius, Rademacher };

const char* to_string(FunctionKind kind);

// Parses "parity", "liouville", "moebius", "rademacher"; throws
// std::invalid_argument otherwise.
FunctionKind parse_function_kind(const std::string& name);

// Builds one of the balanced test families on 1..3N:
//   parity      f(n) = (-1)^(n+1)
//   liouville   f(n) = (-1)^Omega(n), linear sieve
//   moebius     f(n) = mu(n), linear sieve
//   rademacher  independent +-1 from a seeded mt19937_64
// seed is required exactly for rademacher.  Deterministic in
// (kind, big_n, seed).  All families satisfy |f| <= 1, so they are
// (a fortiori essentially) bounded; all are used as balanced functions,
// i.e. with mean value M_f identically zero.
SampledFunction generate(FunctionKind kind, std::int64_t big_n,
                         std::optional<std::uint64_t> seed = std::nullopt);

// Error for malformed function files; message carries the offending row.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reads the function file format: header "n,value", then one row per n in
// ascending order starting at 1.  Row count must be a multiple of 3
// (n_max = 3N).  Throws FormatError naming the row on any violation.
SampledFunction load(const std::string& path);

// Writes `f` in the same format, values with 12 significant digits.
void save(const SampledFunction& f, std::ostream& out);

}  // namespace corravg

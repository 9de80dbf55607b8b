#include "corravg/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "corravg/bounds.hpp"
#include "corravg/correlation.hpp"
#include "corravg/selberg.hpp"
#include "corravg/spectral.hpp"
#include "parallel.hpp"

namespace corravg {

namespace {

constexpr const char* kVersion = "0.1.0";

// All floats are printed with 12 significant digits so identical
// invocations produce byte-identical output.
std::string fmt_double(double x) {
    if (x == 0.0) x = 0.0;  // fold -0 into 0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string jstr(const std::string& s) { return '"' + json_escape(s) + '"'; }

std::string meta_json(const SampledFunction& f, const std::optional<std::uint64_t>& seed) {
    std::string m = "{\"function\":" + jstr(f.label());
    m += ",\"N\":" + std::to_string(f.big_n());
    m += ",\"seed\":" + (seed ? std::to_string(*seed) : std::string("null"));
    m += ",\"version\":" + jstr(kVersion) + "}";
    return m;
}

void emit_json(std::ostream& os, const std::string& meta,
               const std::vector<std::string>& results) {
    os << "{\"meta\":" << meta << ",\"results\":[";
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) os << ',';
        os << results[i];
    }
    os << "]}\n";
}

void write_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "H,deviation,selberg,modified,ratio_I,ratio_II,ratio_III,gallagher_ratio\n";
    for (const ScanRow& r : rows)
        os << r.cap_h << ',' << fmt_double(r.deviation) << ',' << fmt_double(r.selberg)
           << ',' << fmt_double(r.modified) << ',' << fmt_double(r.identity_ratios[0])
           << ',' << fmt_double(r.identity_ratios[1]) << ','
           << fmt_double(r.identity_ratios[2]) << ',' << fmt_double(r.gallagher_ratio)
           << '\n';
}

std::string scan_row_json(const ScanRow& r) {
    return "{\"H\":" + std::to_string(r.cap_h) +
           ",\"deviation\":" + fmt_double(r.deviation) +
           ",\"selberg\":" + fmt_double(r.selberg) +
           ",\"modified\":" + fmt_double(r.modified) +
           ",\"ratio_I\":" + fmt_double(r.identity_ratios[0]) +
           ",\"ratio_II\":" + fmt_double(r.identity_ratios[1]) +
           ",\"ratio_III\":" + fmt_double(r.identity_ratios[2]) +
           ",\"gallagher_ratio\":" + fmt_double(r.gallagher_ratio) + "}";
}

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("bad integer in ") + what + ": \"" +
                                    std::string(s) + "\"");
    return v;
}

// geom:start:stop:count (geometric, rounded to distinct integers) or
// list:a,b,c.
std::vector<std::int64_t> parse_h_grid(const std::string& spec) {
    const std::string_view sv(spec);
    if (sv.rfind("geom:", 0) == 0) {
        std::string_view rest = sv.substr(5);
        std::vector<std::string_view> parts;
        while (true) {
            const auto colon = rest.find(':');
            parts.push_back(rest.substr(0, colon));
            if (colon == std::string_view::npos) break;
            rest = rest.substr(colon + 1);
        }
        if (parts.size() != 3)
            throw std::invalid_argument("--H-grid geom wants geom:start:stop:count, got \"" +
                                        spec + "\"");
        const std::int64_t start = parse_int(parts[0], "--H-grid");
        const std::int64_t stop = parse_int(parts[1], "--H-grid");
        const std::int64_t count = parse_int(parts[2], "--H-grid");
        if (start < 1 || stop < start || count < 1)
            throw std::invalid_argument("--H-grid geom wants 1 <= start <= stop, count >= 1");
        std::vector<std::int64_t> grid;
        grid.reserve(static_cast<std::size_t>(count));
        for (std::int64_t i = 0; i < count; ++i) {
            const double t = count == 1
                                 ? static_cast<double>(start)
                                 : static_cast<double>(start) *
                                       std::pow(static_cast<double>(stop) /
                                                    static_cast<double>(start),
                                                static_cast<double>(i) /
                                                    static_cast<double>(count - 1));
            std::int64_t v = std::llround(t);
            v = std::max(start, std::min(stop, v));
            if (grid.empty() || v > grid.back()) grid.push_back(v);
        }
        return grid;
    }
    if (sv.rfind("list:", 0) == 0) {
        std::string_view rest = sv.substr(5);
        if (rest.empty()) throw std::invalid_argument("--H-grid list is empty");
        std::vector<std::int64_t> grid;
        while (true) {
            const auto comma = rest.find(',');
            grid.push_back(parse_int(rest.substr(0, comma), "--H-grid"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return grid;
    }
    throw std::invalid_argument(
        "--H-grid must be geom:start:stop:count or list:a,b,c, got \"" + spec + "\"");
}

SampledFunction build_function(const std::string& spec, std::int64_t big_n,
                               const std::optional<std::uint64_t>& seed) {
    if (spec.rfind("file:", 0) == 0) {
        SampledFunction f = load(spec.substr(5));
        if (big_n > 0 && big_n != f.big_n())
            throw std::invalid_argument("--N=" + std::to_string(big_n) +
                                        " disagrees with the file (N=" +
                                        std::to_string(f.big_n()) + ")");
        return f;
    }
    if (big_n < 1)
        throw std::invalid_argument("--N is required for built-in families");
    return generate(parse_function_kind(spec), big_n, seed);
}

Identity parse_identity(const std::string& s) {
    if (s == "I") return Identity::I;
    if (s == "II") return Identity::II;
    if (s == "III") return Identity::III;
    throw std::invalid_argument("unknown identity: " + s);
}

TheoremVariant parse_variant(const std::string& s) {
    if (s == "i") return TheoremVariant::I;
    if (s == "ii") return TheoremVariant::II;
    throw std::invalid_argument("unknown variant: " + s);
}

}  // namespace

std::vector<ScanRow> scan(const SampledFunction& f,
                          const std::vector<std::int64_t>& h_grid) {
    if (h_grid.empty()) throw std::invalid_argument("scan: H grid is empty");
    for (std::size_t i = 0; i < h_grid.size(); ++i) {
        if (h_grid[i] < 1) throw std::invalid_argument("scan: H must be >= 1");
        if (i > 0 && h_grid[i] <= h_grid[i - 1])
            throw std::invalid_argument("scan: H grid must be strictly ascending");
    }
    const std::int64_t n_big = f.big_n();
    if (h_grid.back() > n_big) throw std::out_of_range("scan: H grid exceeds N");

    // Shared read-only precomputations: prefix sums P, Q drive the three
    // window quantities in O(N) per row, and one full-support correlation
    // table serves every main term and band energy.
    std::vector<double> p(static_cast<std::size_t>(f.n_max()) + 1);
    p[0] = 0.0;
    for (std::int64_t n = 1; n <= f.n_max(); ++n)
        p[static_cast<std::size_t>(n)] = p[static_cast<std::size_t>(n - 1)] + f.at(n);
    std::vector<double> q(p.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }

    const TableMode mode = n_big > 4096 ? TableMode::Fft : TableMode::Direct;
    const CorrelationTable table = near_diag_table(f, n_big - 1, mode);
    const double sup2 = f.sup_norm() * f.sup_norm();

    std::vector<ScanRow> rows(h_grid.size());
    detail::parallel_for(
        static_cast<std::int64_t>(h_grid.size()),
        [&](std::int64_t begin, std::int64_t end) {
            const auto pi = [&p](std::int64_t j) { return p[static_cast<std::size_t>(j)]; };
            const auto qi = [&q](std::int64_t j) { return q[static_cast<std::size_t>(j)]; };
            for (std::int64_t r = begin; r < end; ++r) {
                const std::int64_t cap_h = h_grid[static_cast<std::size_t>(r)];
                const double hd = static_cast<double>(cap_h);
                ScanRow row;
                row.cap_h = cap_h;

                // D_f by summation swap: sum_n f(n) sum_{h<=H} f(n-h);
                // J and ~J exactly as the fast integral paths.
                double dev = 0.0, sel = 0.0, mod = 0.0;
                for (std::int64_t x = n_big + 1; x <= 2 * n_big; ++x) {
                    dev += f.at(x) * (pi(x - 1) - pi(x - 1 - cap_h));
                    const double w = pi(x + cap_h) - pi(x);
                    sel += w * w;
                    const double c =
                        (qi(x + cap_h - 1) - 2.0 * qi(x - 1) + qi(x - cap_h - 1)) / hd;
                    mod += c * c;
                }
                row.deviation = dev;
                row.selberg = sel;
                row.modified = mod;

                const double lhs[3] = {dev, sel, mod};
                const KernelKind kinds[3] = {KernelKind::UnitStep, KernelKind::Fejer,
                                             KernelKind::CesaroSquared};
                const double bounds[3] = {2.0 * hd * hd * sup2, 8.0 * hd * hd * hd * sup2,
                                          8.0 * hd * hd * hd * sup2};
                for (int i = 0; i < 3; ++i) {
                    const double main = main_term(table, cap_h, kinds[i]);
                    const double residual = std::abs(lhs[i] - main);
                    row.identity_ratios[static_cast<std::size_t>(i)] =
                        residual == 0.0 ? 0.0 : residual / bounds[i];
                }

                const double g_lhs = hd * hd * band_energy(table, 0.5 / hd);
                const double g_rhs = sel + hd * hd * hd * sup2;
                row.gallagher_ratio = g_lhs == 0.0 ? 0.0 : g_lhs / g_rhs;

                rows[static_cast<std::size_t>(r)] = row;
            }
        });
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"correlation averages of balanced arithmetic functions"};
    app.name("corravg");
    app.require_subcommand(1);

    struct {
        std::string function = "parity";
        std::int64_t big_n = 0;
        std::optional<std::uint64_t> seed;
        std::int64_t cap_h = 0;
        std::string h_grid;
        std::string quantity;
        std::string identity;
        std::string variant = "i";
        double a_exp = 0.0;
        double threshold = 100.0;
        bool json = false;
        std::string csv_path;
        std::string out_path;
    } o;

    const auto add_function_opts = [&](CLI::App* cmd) {
        cmd->add_option("--function", o.function,
                        "parity|liouville|moebius|rademacher|file:PATH");
        cmd->add_option("--N", o.big_n, "window size N; samples span 1..3N")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--seed", o.seed, "RNG seed (rademacher only)");
        cmd->add_option("--out", o.out_path, "write the primary output to PATH");
    };
    const auto add_json = [&](CLI::App* cmd) {
        cmd->add_flag("--json", o.json, "emit the JSON report schema");
    };
    const auto add_h = [&](CLI::App* cmd) {
        return cmd->add_option("--H", o.cap_h, "interval length H")
            ->required()
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a function file (header n,value)");
    add_function_opts(gen);

    CLI::App* compute =
        app.add_subcommand("compute", "compute one quantity at a single H");
    add_function_opts(compute);
    add_json(compute);
    add_h(compute);
    compute->add_option("--quantity", o.quantity, "deviation|selberg|modified")
        ->required()
        ->check(CLI::IsMember({"deviation", "selberg", "modified"}));

    CLI::App* verify =
        app.add_subcommand("verify", "check one identity against its residual bound");
    add_function_opts(verify);
    add_json(verify);
    add_h(verify);
    verify->add_option("--identity", o.identity, "I|II|III")
        ->required()
        ->check(CLI::IsMember({"I", "II", "III"}));

    CLI::App* scan_cmd =
        app.add_subcommand("scan", "populate quantities and ratios over an H grid");
    add_function_opts(scan_cmd);
    add_json(scan_cmd);
    scan_cmd
        ->add_option("--H-grid", o.h_grid, "geom:start:stop:count or list:a,b,c")
        ->required();
    scan_cmd->add_option("--csv", o.csv_path, "also write the CSV rows to PATH");

    CLI::App* gallagher =
        app.add_subcommand("gallagher", "check the band-energy inequality at one h");
    add_function_opts(gallagher);
    add_json(gallagher);
    add_h(gallagher);
    gallagher->add_option("--variant", o.variant, "i (Selberg) | ii (modified)")
        ->check(CLI::IsMember({"i", "ii"}));
    gallagher->add_option("--threshold", o.threshold, "ratio threshold (default 100)")
        ->check(CLI::PositiveNumber);

    CLI::App* theorem = app.add_subcommand(
        "theorem", "report hypothesis/conclusion diagnostics for one (A, H)");
    add_function_opts(theorem);
    add_json(theorem);
    add_h(theorem);
    theorem->add_option("--variant", o.variant, "i|ii")
        ->required()
        ->check(CLI::IsMember({"i", "ii"}));
    theorem->add_option("--A", o.a_exp, "hypothesis exponent A")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("corravg");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const SampledFunction f = build_function(o.function, o.big_n, o.seed);

        std::ofstream out_file;
        std::ostream* dest = &out;
        if (!o.out_path.empty()) {
            out_file.open(o.out_path);
            if (!out_file)
                throw std::invalid_argument("cannot open --out path: " + o.out_path);
            dest = &out_file;
        }
        const std::string meta = meta_json(f, o.seed);

        if (gen->parsed()) {
            save(f, *dest);
            return 0;
        }

        if (compute->parsed()) {
            double value = 0.0;
            if (o.quantity == "deviation")
                value = deviation(f, o.cap_h);
            else if (o.quantity == "selberg")
                value = selberg_integral(f, o.cap_h).value;
            else
                value = modified_selberg_integral(f, o.cap_h).value;
            if (o.json) {
                emit_json(*dest, meta,
                          {"{\"quantity\":" + jstr(o.quantity) +
                           ",\"H\":" + std::to_string(o.cap_h) +
                           ",\"value\":" + fmt_double(value) + "}"});
            } else {
                *dest << fmt_double(value) << '\n';
            }
            return 0;
        }

        if (verify->parsed()) {
            const IdentityReport rep = verify_identity(f, o.cap_h, parse_identity(o.identity));
            const bool pass = rep.ratio <= 1.0;
            if (o.json) {
                emit_json(*dest, meta,
                          {std::string("{\"identity\":") + jstr(to_string(rep.which)) +
                           ",\"H\":" + std::to_string(o.cap_h) +
                           ",\"lhs\":" + fmt_double(rep.lhs) +
                           ",\"main_term\":" + fmt_double(rep.main_term) +
                           ",\"residual\":" + fmt_double(rep.residual) +
                           ",\"bound\":" + fmt_double(rep.bound) +
                           ",\"ratio\":" + fmt_double(rep.ratio) +
                           ",\"pass\":" + (pass ? "true" : "false") + "}"});
            } else {
                *dest << "identity=" << to_string(rep.which) << " H=" << o.cap_h
                      << " lhs=" << fmt_double(rep.lhs)
                      << " main_term=" << fmt_double(rep.main_term)
                      << " residual=" << fmt_double(rep.residual)
                      << " bound=" << fmt_double(rep.bound)
                      << " ratio=" << fmt_double(rep.ratio)
                      << " pass=" << (pass ? "true" : "false") << '\n';
            }
            return pass ? 0 : 1;
        }

        if (scan_cmd->parsed()) {
            const std::vector<ScanRow> rows = scan(f, parse_h_grid(o.h_grid));
            if (!o.csv_path.empty()) {
                std::ofstream csv(o.csv_path);
                if (!csv)
                    throw std::invalid_argument("cannot open --csv path: " + o.csv_path);
                write_csv(csv, rows);
            }
            if (o.json) {
                std::vector<std::string> results;
                results.reserve(rows.size());
                for (const ScanRow& r : rows) results.push_back(scan_row_json(r));
                emit_json(*dest, meta, results);
            } else {
                write_csv(*dest, rows);
            }
            return 0;
        }

        if (gallagher->parsed()) {
            const GallagherReport rep =
                gallagher_check(f, o.cap_h, parse_variant(o.variant), o.threshold);
            if (o.json) {
                emit_json(*dest, meta,
                          {std::string("{\"h\":") + std::to_string(rep.h) +
                           ",\"variant\":" + jstr(to_string(rep.variant)) +
                           ",\"lhs\":" + fmt_double(rep.lhs) +
                           ",\"rhs_core\":" + fmt_double(rep.rhs_core) +
                           ",\"ratio\":" + fmt_double(rep.ratio) +
                           ",\"threshold\":" + fmt_double(rep.threshold) +
                           ",\"within_threshold\":" +
                           (rep.within_threshold ? "true" : "false") + "}"});
            } else {
                *dest << "h=" << rep.h << " variant=" << to_string(rep.variant)
                      << " lhs=" << fmt_double(rep.lhs)
                      << " rhs_core=" << fmt_double(rep.rhs_core)
                      << " ratio=" << fmt_double(rep.ratio)
                      << " threshold=" << fmt_double(rep.threshold)
                      << " within_threshold=" << (rep.within_threshold ? "true" : "false")
                      << '\n';
            }
            return rep.within_threshold ? 0 : 1;
        }

        // theorem
        const TheoremReport rep =
            theorem_report(f, o.cap_h, parse_variant(o.variant), o.a_exp);
        if (o.json) {
            emit_json(*dest, meta,
                      {std::string("{\"variant\":") + jstr(to_string(rep.variant)) +
                       ",\"A\":" + fmt_double(rep.a_exp) +
                       ",\"N\":" + std::to_string(rep.big_n) +
                       ",\"H\":" + std::to_string(rep.cap_h) +
                       ",\"derived_length\":" + std::to_string(rep.derived_length) +
                       ",\"hyp_value_H\":" + fmt_double(rep.hyp_value_h) +
                       ",\"hyp_scale_H\":" + fmt_double(rep.hyp_scale_h) +
                       ",\"hyp_ratio_H\":" + fmt_double(rep.hyp_ratio_h) +
                       ",\"hyp_value_derived\":" + fmt_double(rep.hyp_value_derived) +
                       ",\"hyp_scale_derived\":" + fmt_double(rep.hyp_scale_derived) +
                       ",\"hyp_ratio_derived\":" + fmt_double(rep.hyp_ratio_derived) +
                       ",\"conclusion_value\":" + fmt_double(rep.conclusion_value) +
                       ",\"conclusion_bound\":" + fmt_double(rep.conclusion_bound) +
                       ",\"conclusion_ratio\":" + fmt_double(rep.conclusion_ratio) + "}"});
        } else {
            *dest << "variant=" << to_string(rep.variant) << " A=" << fmt_double(rep.a_exp)
                  << " N=" << rep.big_n << " H=" << rep.cap_h
                  << " derived_length=" << rep.derived_length << '\n'
                  << "hyp_value_H=" << fmt_double(rep.hyp_value_h)
                  << " hyp_scale_H=" << fmt_double(rep.hyp_scale_h)
                  << " hyp_ratio_H=" << fmt_double(rep.hyp_ratio_h) << '\n'
                  << "hyp_value_derived=" << fmt_double(rep.hyp_value_derived)
                  << " hyp_scale_derived=" << fmt_double(rep.hyp_scale_derived)
                  << " hyp_ratio_derived=" << fmt_double(rep.hyp_ratio_derived) << '\n'
                  << "conclusion_value=" << fmt_double(rep.conclusion_value)
                  << " conclusion_bound=" << fmt_double(rep.conclusion_bound)
                  << " conclusion_ratio=" << fmt_double(rep.conclusion_ratio) << '\n';
        }
        return 0;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace corravg

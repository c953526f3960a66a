#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "rzeta/checks.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/report.hpp"
#include "rzeta/series.hpp"

namespace {

using namespace rzeta;

struct CommonOpts {
    std::string s_text = "2";
    int base = 2;
    std::string digits = "all";
    int level = 0;  // 0: pick by base
    int digits_out = 50;
    int max_terms = 100000;
    int threads = 0;  // 0: RZETA_THREADS or 1
    bool json = false;
};

int default_level(int base) { return base <= 3 ? 3 : 2; }

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("RZETA_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1 || parsed > 256)
            throw UsageError("RZETA_THREADS must be an integer in [1, 256]");
        return static_cast<int>(parsed);
    }
    return 1;
}

int run_series_command(const CommonOpts& opts, bool force_full_alphabet) {
    const PrecisionContext ctx(opts.digits_out);
    const long wb = ctx.working_bits();
    const Cplx s = parse_s_literal(opts.s_text, wb);
    const DigitSet ds = force_full_alphabet ? DigitSet::full(opts.base)
                                            : DigitSet::parse(opts.digits, opts.base);
    const int level = opts.level > 0 ? opts.level : default_level(opts.base);
    const SeriesResult run =
        evaluate_series(ds, s, level, ctx, opts.max_terms, resolve_threads(opts.threads));

    RunReport report;
    report.base = opts.base;
    report.digits_spec = ds.to_string();
    report.s_literal = opts.s_text;
    report.level = level;
    report.precision = opts.digits_out;
    report.value = run.value;
    report.error_bound = run.error_bound;
    report.terms = run.terms_used;
    report.elapsed_ms = run.elapsed_ms;
    report.method = "moment-series";
    if (run.bracket) {
        report.bracket_lower = run.bracket->first;
        report.bracket_upper = run.bracket->second;
    }
    std::cout << (opts.json ? report.to_json() : report.to_text());
    if (opts.json) std::cout << '\n';
    return 0;
}

int run_moments_command(const CommonOpts& opts, int max_m) {
    const PrecisionContext ctx(opts.digits_out);
    const long wb = ctx.working_bits();
    const Cplx s = parse_s_literal(opts.s_text, wb);
    const DigitSet ds = DigitSet::parse(opts.digits, opts.base);
    const MomentTable table = build_moment_table(ds, s, max_m, ctx);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int m = 0; m <= max_m; ++m) {
        const Cplx u_star = table.u_star(m);
        const Cplx c = table.c(m);
        rows.push_back({
            {"m", m},
            {"u_star_re", u_star.re().str_sci(opts.digits_out)},
            {"u_star_im", u_star.im().str_sci(opts.digits_out)},
            {"normalized_re", c.re().str_sci(opts.digits_out)},
            {"normalized_im", c.im().str_sci(opts.digits_out)},
        });
    }
    std::cout << rows.dump(2) << '\n';
    return 0;
}

int print_check_results(const std::vector<CheckResult>& results) {
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("[%s] %-22s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int run_check_command(const std::string& family, const CheckOptions& options) {
    const auto results =
        family.empty() ? run_all_checks(options) : run_check_family(family, options);
    return print_check_results(results);
}

int run_bench_command(double sigma, int digits_out, int base, int max_terms, int threads) {
    const PrecisionContext ctx(digits_out);
    const long wb = ctx.working_bits();
    const DigitSet ds = DigitSet::full(base);
    const int level = default_level(base);

    std::printf("# series cost vs Im s (sigma=%g, %d digits, base %d, level %d)\n", sigma,
                digits_out, base, level);
    for (double t : {0.0, 20.0, 50.0}) {
        const Cplx s(Real::from_double(sigma, wb), Real::from_double(t, wb));
        const SeriesResult run = evaluate_series(ds, s, level, ctx, max_terms, threads);
        std::printf("t=%-5g terms=%-6d planned=%-6d elapsed_ms=%.3f\n", t, run.terms_used,
                    run.planned_terms, run.elapsed_ms);
    }

    std::printf("# recurrence cost vs table size (sigma=%g, %d digits, base %d)\n", sigma,
                digits_out, base);
    const Cplx s(Real::from_double(sigma, wb), Real::from_long(0, wb));
    for (int m : {100, 200, 400}) {
        const auto start = std::chrono::steady_clock::now();
        const MomentTable table = build_moment_table(ds, s, m, ctx);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        std::printf("M=%-5d elapsed_ms=%.3f (c_M magnitude %s)\n", m, ms,
                    abs(table.c(m)).str_sci(3).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arbitrary-precision zeta and digit-restricted Dirichlet sums via the "
                 "moment-recurrence series"};
    app.require_subcommand(1);

    CommonOpts zeta_opts;
    CommonOpts kempner_opts;
    CommonOpts moments_opts;
    moments_opts.digits_out = 30;
    int moments_max_m = 20;
    std::string check_family;
    double check_sigma = 0.0;
    double check_t = 0.0;
    double bench_sigma = 2.0;
    int bench_digits = 30;
    int bench_base = 2;
    int bench_max_terms = 100000;
    int bench_threads = 0;

    const auto add_series_flags = [](CLI::App* cmd, CommonOpts& opts, bool with_digits) {
        cmd->add_option("--s", opts.s_text,
                        "s as <sigma>, <sigma>+<t>i or <sigma>-<t>i (plain decimals)");
        cmd->add_option("--base", opts.base, "radix b")->check(CLI::Range(2, 32));
        if (with_digits)
            cmd->add_option("--digits", opts.digits,
                            "admissible digits: 'all', or comma list of digits/ranges");
        cmd->add_option("--level", opts.level, "digit depth splitting head from blocks")
            ->check(CLI::Range(1, 40));
        cmd->add_option("--digits-out", opts.digits_out, "target decimal digits")
            ->check(CLI::Range(1, 2000));
        cmd->add_option("--max-terms", opts.max_terms, "term budget cap")
            ->check(CLI::Range(2, 10000000));
        cmd->add_option("--threads", opts.threads, "worker threads for block sums")
            ->check(CLI::Range(1, 256));
        cmd->add_flag("--json", opts.json, "machine-readable report");
    };

    int rc = 0;

    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta via the full-alphabet series");
    add_series_flags(zeta_cmd, zeta_opts, false);
    zeta_cmd->callback([&] { rc = run_series_command(zeta_opts, true); });

    CLI::App* kempner_cmd =
        app.add_subcommand("kempner", "digit-restricted Dirichlet sum K_{b,A,s}");
    add_series_flags(kempner_cmd, kempner_opts, true);
    kempner_cmd->callback([&] { rc = run_series_command(kempner_opts, false); });

    CLI::App* moments_cmd =
        app.add_subcommand("moments", "dump the rescaled moment table as JSON rows");
    moments_cmd->add_option("--s", moments_opts.s_text, "s literal");
    moments_cmd->add_option("--base", moments_opts.base, "radix b")->check(CLI::Range(2, 32));
    moments_cmd->add_option("--digits", moments_opts.digits, "admissible digits");
    moments_cmd->add_option("--max-m", moments_max_m, "highest moment index")
        ->check(CLI::Range(0, 100000));
    moments_cmd->add_option("--digits-out", moments_opts.digits_out, "significant digits")
        ->check(CLI::Range(1, 2000));
    moments_cmd->callback([&] { rc = run_moments_command(moments_opts, moments_max_m); });

    CLI::App* mgf_cmd = app.add_subcommand(
        "mgf-check", "validate the moment generating function identities");
    mgf_cmd->callback([&] { rc = run_check_command("mgf", CheckOptions{}); });

    CLI::App* check_cmd =
        app.add_subcommand("check", "run invariant families; exit 1 on any failure");
    check_cmd->add_option("--family", check_family, "one family (default: all)");
    CLI::Option* sigma_opt =
        check_cmd->add_option("--sigma", check_sigma, "extra bound report: Re s");
    CLI::Option* t_opt = check_cmd->add_option("--t", check_t, "extra bound report: Im s");
    check_cmd->callback([&] {
        CheckOptions options;
        if (sigma_opt->count() > 0) options.sigma = check_sigma;
        if (t_opt->count() > 0) options.t = check_t;
        rc = run_check_command(check_family, options);
    });

    CLI::App* bench_cmd =
        app.add_subcommand("bench", "term-count and recurrence-cost growth measurements");
    bench_cmd->add_option("--sigma", bench_sigma, "Re s for the t grid");
    bench_cmd->add_option("--digits-out", bench_digits, "target decimal digits")
        ->check(CLI::Range(1, 200));
    bench_cmd->add_option("--base", bench_base, "radix b")->check(CLI::Range(2, 32));
    bench_cmd->add_option("--max-terms", bench_max_terms, "term budget cap")
        ->check(CLI::Range(2, 10000000));
    bench_cmd->add_option("--threads", bench_threads, "worker threads")
        ->check(CLI::Range(1, 256));
    bench_cmd->callback([&] {
        rc = run_bench_command(bench_sigma, bench_digits, bench_base, bench_max_terms,
                               resolve_threads(bench_threads));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_rc = app.exit(e);
        return cli_rc == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported configuration: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}

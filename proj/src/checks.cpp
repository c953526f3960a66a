#include "rzeta/checks.hpp"

#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "rzeta/bernoulli.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/mgf.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/oracle.hpp"
#include "rzeta/series.hpp"

namespace rzeta {

namespace {

std::string sci(const Real& x) { return x.str_sci(2); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Cplx make_s(double sigma, double t, long bits) {
    return Cplx(Real::from_double(sigma, bits), Real::from_double(t, bits));
}

}  // namespace

CheckResult check_zeta_two_to_hundred_digits() {
    const PrecisionContext ctx(100);
    const DigitSet ds = DigitSet::full(2);
    const SeriesResult run = evaluate_series(ds, make_s(2.0, 0.0, ctx.working_bits()), 3, ctx);

    const long wb = ctx.working_bits() + 64;
    Real truth = Real::pi(wb) * Real::pi(wb);
    truth /= 6L;
    const Real diff = abs(run.value.re() - truth) + abs(run.value.im());
    const Real tol = Real::exp10_of(-100, wb);
    const bool in_time = run.elapsed_ms < 10000.0;

    CheckResult result;
    result.name = "zeta2-100digits";
    result.passed = diff < tol && in_time;
    std::ostringstream detail;
    detail << "|value - pi^2/6| = " << sci(diff) << " (tol 1e-100), " << run.terms_used
           << " terms in " << sci(run.elapsed_ms) << " ms (limit 1e4)";
    result.detail = detail.str();
    return result;
}

CheckResult check_zeta_oracle_agreement() {
    const PrecisionContext ctx(50);
    const long wb = ctx.working_bits();
    const DigitSet ds = DigitSet::full(2);
    const Real tol = Real::exp10_of(-45, wb);

    CheckResult result;
    result.name = "zeta-oracle";
    result.passed = true;
    Real worst = Real::from_long(0, wb);
    std::string offender;
    const std::pair<double, double> points[] = {{3, 0}, {2.5, 0}, {2, 3}, {2, 10}};
    for (auto [sigma, t] : points) {
        const SeriesResult run = evaluate_series(ds, make_s(sigma, t, wb), 3, ctx);
        const Cplx reference = zeta_reference(make_s(sigma, t, wb), 60);
        const Real diff = abs(run.value - reference);
        const Real combined = run.error_bound + Real::exp10_of(-58, wb);
        if (!(diff < tol) || !(diff <= combined)) {
            result.passed = false;
            offender = " at s = " + sci(Real::from_double(sigma, 64)) + "+" + sci(t) + "i";
        }
        worst = max(worst, diff);
    }
    result.detail = "max |series - reference| = " + sci(worst) +
                    " (tol 1e-45, each within combined bounds)" + offender;
    return result;
}

CheckResult check_base_invariance() {
    const PrecisionContext ctx(50);
    const long wb = ctx.working_bits();
    const Real tol = Real::exp10_of(-45, wb);

    const Cplx v2 = evaluate_series(DigitSet::full(2), make_s(3, 0, wb), 3, ctx).value;
    const Cplx v3 = evaluate_series(DigitSet::full(3), make_s(3, 0, wb), 3, ctx).value;
    const Cplx v10 = evaluate_series(DigitSet::full(10), make_s(3, 0, wb), 2, ctx).value;
    Real spread = max(abs(v2 - v3), max(abs(v2 - v10), abs(v3 - v10)));

    CheckResult result;
    result.name = "base-invariance";
    result.passed = spread < tol;
    result.detail = "zeta(3) via b in {2,3,10}: max spread = " + sci(spread) + " (tol 1e-45)";
    return result;
}

CheckResult check_level_invariance() {
    const PrecisionContext ctx(50);
    const long wb = ctx.working_bits();
    const Real tol = Real::exp10_of(-45, wb);
    const DigitSet ds = DigitSet::full(2);
    const Cplx s = make_s(2.5, 0, wb);

    std::vector<SeriesResult> runs;
    for (int level = 2; level <= 5; ++level) runs.push_back(evaluate_series(ds, s, level, ctx));

    Real spread = Real::from_long(0, wb);
    bool within_bounds = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        for (std::size_t j = i + 1; j < runs.size(); ++j) {
            const Real diff = abs(runs[i].value - runs[j].value);
            spread = max(spread, diff);
            if (!(diff <= runs[i].error_bound + runs[j].error_bound)) within_bounds = false;
        }
    }

    CheckResult result;
    result.name = "level-invariance";
    result.passed = spread < tol && within_bounds;
    result.detail = "s=2.5, levels 2..5: max spread = " + sci(spread) +
                    " (tol 1e-45), pairwise within summed bounds: " +
                    (within_bounds ? "yes" : "no");
    return result;
}

CheckResult check_kempner_no_nine() {
    const PrecisionContext ctx(50);
    const long wb = ctx.working_bits();
    const DigitSet ds = DigitSet::parse("0-8", 10);
    const Cplx s = make_s(1, 0, wb);

    const SeriesResult level2 = evaluate_series(ds, s, 2, ctx);
    const SeriesResult level3 = evaluate_series(ds, s, 3, ctx);
    const Real diff = abs(level2.value - level3.value);
    const Real tol = Real::exp10_of(-40, wb);

    const SumBracket bracket =
        restricted_sum_bracket(ds, Real::from_long(1, wb), 7, ctx);
    const Real value = level2.value.re();
    const bool inside = value >= bracket.lower - level2.error_bound &&
                        value <= bracket.upper + level2.error_bound;

    CheckResult result;
    result.name = "kempner-no9";
    result.passed = inside && diff < tol;
    std::ostringstream detail;
    detail << "no-9 sum = " << value.str_fixed(15) << ", enumeration bracket ["
           << bracket.lower.str_fixed(6) << ", " << bracket.upper.str_fixed(6)
           << "] contains it: " << (inside ? "yes" : "no")
           << "; |level2 - level3| = " << sci(diff) << " (tol 1e-40)";
    result.detail = detail.str();
    return result;
}

CheckResult check_log2_identity() {
    const PrecisionContext ctx(45);
    const Real value = limit_identity_log2(2, 120, ctx);
    const long wb = ctx.working_bits() + 64;
    const Real truth = Real::log_of_ulong(2, wb);
    const Real diff = abs(value - truth);
    const Real tol = Real::exp10_of(-30, wb);

    CheckResult result;
    result.name = "log2-identity";
    result.passed = diff < tol;
    result.detail = "level display at s=1 (level 2, M=120): |sum - log 2| = " + sci(diff) +
                    " (tol 1e-30)";
    return result;
}

CheckResult check_constant_sequence() {
    const std::vector<mpq_class> c = rational_normalized_moments(DigitSet::full(2), 1, 50);
    int bad = -1;
    for (std::size_t m = 0; m < c.size(); ++m) {
        if (c[m] != 1) {
            bad = static_cast<int>(m);
            break;
        }
    }
    CheckResult result;
    result.name = "constant-sequence";
    result.passed = bad < 0;
    result.detail = bad < 0 ? "c_m = 1 exactly for m <= 50 at b=2, s=1 (rational mode)"
                            : "c_" + std::to_string(bad) + " != 1 in rational mode";
    return result;
}

CheckResult check_bound_sandwich() {
    const PrecisionContext ctx(60);
    const long wb = ctx.working_bits();
    const int M = 200;

    CheckResult result;
    result.name = "bound-sandwich";
    result.passed = true;
    Real worst_upper = Real::from_long(0, wb);  // max u*_m / upper
    const Real upper_slack = Real::from_long(1, wb) + Real::exp10_of(-40, wb);
    for (int b : {2, 10}) {
        const DigitSet ds = DigitSet::full(b);
        for (double sigma : {1.1, 2.0, 3.0, 5.0}) {
            const MomentTable table = build_moment_table(ds, make_s(sigma, 0, wb), M, ctx);
            const Real bs = pow(Real::from_long(b, wb), Real::from_double(sigma, wb));
            const Real lower = Real::from_long(1, wb) / (bs - Real::from_long(b, wb));
            const Real upper = bs / (bs - Real::from_long(b, wb));
            for (int m = 0; m <= M; ++m) {
                const Real u = table.u_star(m).re();
                if (!(lower < u) || !(u <= upper * upper_slack)) {
                    result.passed = false;
                    result.detail = "violation at b=" + std::to_string(b) +
                                    " sigma=" + sci(sigma) + " m=" + std::to_string(m);
                }
                worst_upper = max(worst_upper, u / upper);
            }
        }
    }
    if (result.passed) {
        result.detail =
            "1/(b^s-b) < u*_m <= b^s/(b^s-b) for b in {2,10}, sigma in {1.1,2,3,5}, m <= 200"
            "; max u*_m/(upper bound) = " +
            sci(worst_upper);
    }
    return result;
}

CheckResult check_normalized_domination() {
    const PrecisionContext ctx(40);
    const long wb = ctx.working_bits();
    const int M = 150;
    const Real slack = Real::from_long(1, wb) + Real::exp10_of(-25, wb);

    std::vector<DigitSet> sets;
    sets.push_back(DigitSet::full(2));
    sets.push_back(DigitSet::full(10));
    sets.push_back(DigitSet::parse("0-8", 10));
    sets.push_back(DigitSet::parse("1,3,7", 10));
    sets.push_back(DigitSet::parse("0,2", 3));

    CheckResult result;
    result.name = "normalized-domination";
    result.passed = true;
    double worst_ratio = 0.0;
    std::mt19937_64 rng(0x5eed0001ULL);
    std::uniform_real_distribution<double> im_dist(-50.0, 50.0);
    for (int sample = 0; sample < 100; ++sample) {
        const DigitSet& ds = sets[static_cast<std::size_t>(sample) % sets.size()];
        const double abscissa = ds.is_full() ? 1.0 : ds.abscissa();
        std::uniform_real_distribution<double> re_dist(abscissa + 0.011, 6.0);
        const double sigma = re_dist(rng);
        const double t = im_dist(rng);

        const MomentTable at_s = build_moment_table(ds, make_s(sigma, t, wb), M, ctx);
        const MomentTable at_sigma = build_moment_table(ds, make_s(sigma, 0, wb), M, ctx);
        for (int m = 0; m <= M; ++m) {
            const Real lhs = abs(at_s.raw_normalized(m));
            const Real rhs = at_sigma.raw_normalized(m).re();
            const double ratio = (lhs / rhs).to_double();
            worst_ratio = std::max(worst_ratio, ratio);
            if (!(lhs <= rhs * slack)) {
                result.passed = false;
                result.detail = "violation at b=" + std::to_string(ds.base()) + " digits=" +
                                ds.to_string() + " s=" + sci(sigma) + "+" + sci(t) +
                                "i m=" + std::to_string(m);
            }
        }
    }
    if (result.passed) {
        result.detail =
            "|u_m(s)/u_0(s)| <= u_m(sigma)/u_0(sigma) over 100 random s, m <= 150; max ratio = " +
            sci(worst_ratio);
    }
    return result;
}

CheckResult check_closed_form_agreement() {
    const PrecisionContext ctx(100);
    const long wb = ctx.working_bits();
    const Real tol = Real::exp10_of(-60, wb);
    const int M = 60;

    CheckResult result;
    result.name = "closed-form";
    result.passed = true;
    Real worst = Real::from_long(0, wb);
    const std::pair<double, double> points[] = {{2, 0}, {3, 0}, {4, 5}};
    for (auto [sigma, t] : points) {
        const Cplx s = make_s(sigma, t, wb);
        const MomentTable table = build_moment_table(DigitSet::full(2), s, M, ctx);
        for (int m = 0; m <= M; ++m) {
            const Cplx closed = moment_closed_form(2, s, m, bernoulli_cache(), ctx);
            const Real diff = abs(closed - table.u(m));
            worst = max(worst, diff);
            if (!(diff < tol)) {
                result.passed = false;
                result.detail = "mismatch at s=" + sci(sigma) + "+" + sci(t) +
                                "i m=" + std::to_string(m) + ": " + sci(diff);
            }
        }
    }

    const ClosedFormDemo demo = double_precision_closed_form_demo(2, 3.0, 30);
    const double ratio =
        demo.relative_error_closed_form / std::max(demo.relative_error_recurrence, 1e-300);
    if (!(ratio > 1e3)) result.passed = false;
    if (result.passed) {
        result.detail = "closed form vs recurrence: max |diff| = " + sci(worst) +
                        " (tol 1e-60); 53-bit demo error ratio = " + sci(ratio) + " (> 1e3)";
    } else if (result.detail.empty()) {
        result.detail = "53-bit demo error ratio = " + sci(ratio) + " (needs > 1e3)";
    }
    return result;
}

CheckResult check_real_bracketing() {
    const PrecisionContext ctx(50);
    const long wb = ctx.working_bits();
    const DigitSet ds = DigitSet::full(2);
    const int level = 3;

    CheckResult result;
    result.name = "real-bracketing";
    result.passed = true;
    int pairs_checked = 0;
    for (double sigma : {1.5, 2.0, 3.0, 6.0}) {
        const Cplx s = make_s(sigma, 0, wb);

        const PrecisionContext ref_ctx(70);
        const SeriesResult ref =
            evaluate_series(ds, make_s(sigma, 0, ref_ctx.working_bits()), level, ref_ctx);
        const Real limit = at_precision(ref.value.re(), wb + 64);

        const TermPlan plan =
            plan_terms(ds, s, level, Real::exp10_of(-50.7, wb), 100000);
        const int M = plan.terms + 1;
        const MomentTable table = build_moment_table(ds, s, M, ctx);
        const std::vector<Cplx> blocks =
            block_power_sums(ds.block(level), s, M, wb, 1);

        Cplx partial(Real::from_long(0, wb), Real::from_long(0, wb));
        ds.for_each_below(level, [&](std::uint64_t n) { partial += npow_negs(n, s, wb); });
        partial += table.mass * blocks[0];

        const Real slack = ref.error_bound + Real::exp10_of(-55, wb);
        Real previous = partial.re();
        for (int m = 1; m <= M; ++m) {
            Cplx term = table.u_star(m) * blocks[static_cast<std::size_t>(m)];
            term *= s / (s + Cplx(Real::from_long(m, wb), Real::from_long(0, wb)));
            if (m % 2 == 1) partial -= term; else partial += term;
            const Real current = partial.re();
            const Real lo = min(previous, current) - slack;
            const Real hi = max(previous, current) + slack;
            if (!(limit >= lo && limit <= hi)) {
                result.passed = false;
                result.detail = "enclosure broken at sigma=" + sci(sigma) +
                                " truncation m=" + std::to_string(m);
            }
            previous = current;
            ++pairs_checked;
        }
    }
    if (result.passed) {
        result.detail = "consecutive partial sums enclose the limit at every truncation (" +
                        std::to_string(pairs_checked) + " pairs, sigma in {1.5,2,3,6})";
    }
    return result;
}

CheckResult check_mgf_suite() {
    CheckResult result;
    result.name = "mgf-suite";
    result.passed = true;
    std::ostringstream detail;

    {  // functional equation E(t) = 1 + b^-s alpha(t/b) E(t/b), 40 working digits
        const PrecisionContext ctx(30, 10);
        const long wb = ctx.working_bits();
        const DigitSet ds = DigitSet::full(2);
        const Cplx s = make_s(2.5, 0, wb);
        const Cplx one(Real::from_long(1, wb), Real::from_long(0, wb));
        const Cplx bs_inv = cinv(rpow(Real::from_long(2, wb), s));
        const Real tol = Real::exp10_of(-30, wb);
        Real worst = Real::from_long(0, wb);
        std::mt19937_64 rng(0x5eed0002ULL);
        std::uniform_real_distribution<double> coord(-3.5, 3.5);
        for (int i = 0; i < 20; ++i) {
            const double re = coord(rng);
            const double im = coord(rng);
            const Cplx t = make_s(re, im, wb);
            const Cplx half = t * Real::from_double(0.5, wb);
            const Cplx lhs = evaluate_E(ds, s, t, ctx).value;
            const Cplx rhs = one + bs_inv * alpha(ds, half) * evaluate_E(ds, s, half, ctx).value;
            worst = max(worst, abs(lhs - rhs));
        }
        if (!(worst < tol)) result.passed = false;
        detail << "funceq residual " << sci(worst) << " (tol 1e-30)";
    }

    {  // Taylor coefficients against the moment recurrence
        const PrecisionContext ctx(35, 10);
        const long wb = ctx.working_bits();
        const Real tol = Real::exp10_of(-25, wb);
        Real worst = Real::from_long(0, wb);
        const std::pair<DigitSet, double> cases[] = {
            {DigitSet::full(2), 2.5},
            {DigitSet::parse("0-8", 10), 1.5},
        };
        for (const auto& [ds, sigma] : cases) {
            const Cplx s = make_s(sigma, 0, wb);
            const std::vector<Cplx> taylor = mgf_taylor_moments(ds, s, 10, ctx);
            const MomentTable table = build_moment_table(ds, s, 10, ctx);
            for (int m = 0; m <= 10; ++m)
                worst = max(worst, abs(taylor[static_cast<std::size_t>(m)] - table.u(m)));
        }
        if (!(worst < tol)) result.passed = false;
        detail << "; taylor-vs-moments " << sci(worst) << " (tol 1e-25)";
    }

    {  // multiplicative periodicity F(bt) = F(t)
        const PrecisionContext ctx(30, 10);
        const long wb = ctx.working_bits();
        const DigitSet ds = DigitSet::full(2);
        const Cplx s = make_s(2.5, 0, wb);
        const Real tol = Real::exp10_of(-20, wb);
        Real worst = Real::from_long(0, wb);
        const std::pair<double, double> ts[] = {{1.3, 0.0}, {1.1, 0.7}};
        for (auto [re, im] : ts) {
            const Cplx t = make_s(re, im, wb);
            const Cplx f1 = evaluate_F(ds, s, t, ctx).value;
            const Cplx f2 = evaluate_F(ds, s, t * Real::from_long(2, wb), ctx).value;
            worst = max(worst, abs(f1 - f2));
        }
        if (!(worst < tol)) result.passed = false;
        detail << "; periodicity " << sci(worst) << " (tol 1e-20)";
    }

    {  // zeroth Fourier coefficient = Gamma(3) zeta(3) / log 2 at b=2
        const long tb = Real::bits_for_digits(25) + 64;
        const Real zeta3 = zeta_reference(make_s(3, 0, tb), 25).re();
        const Real truth = zeta3 * Real::from_long(2, tb) / Real::log_of_ulong(2, tb);
        const Cplx truth_c(truth, Real::from_long(0, tb));

        const DigitSet ds = DigitSet::full(2);
        const PrecisionContext ctx(10);
        const Cplx s = make_s(3, 0, ctx.working_bits());
        const Real diff_sum = abs(fourier_coefficient(ds, s, 0, ctx) - truth_c);
        const Real diff_quad = abs(fourier_by_quadrature(ds, s, 0, ctx) - truth_c);
        const long wb = ctx.working_bits();
        if (!(diff_sum < Real::exp10_of(-9, wb))) result.passed = false;
        if (!(diff_quad < Real::exp10_of(-8, wb))) result.passed = false;
        detail << "; fourier0 sum " << sci(diff_sum) << " (tol 1e-9), quadrature "
               << sci(diff_quad) << " (tol 1e-8)";
    }

    result.detail = detail.str();
    return result;
}

CheckResult check_term_growth() {
    const DigitSet ds = DigitSet::full(2);
    const Real eps = Real::exp10_of(-30.7, 128);  // a quarter of 10^-30

    std::vector<int> terms;
    for (double t : {0.0, 20.0, 50.0})
        terms.push_back(plan_terms(ds, make_s(2, t, 128), 3, eps, 100000).terms);

    CheckResult result;
    result.name = "term-growth";
    result.passed = terms[0] < terms[1] && terms[1] < terms[2];
    result.detail = "terms needed at sigma=2, 30 digits, t in {0,20,50}: " +
                    std::to_string(terms[0]) + ", " + std::to_string(terms[1]) + ", " +
                    std::to_string(terms[2]) + (result.passed ? " (strictly increasing)" : "");
    return result;
}

namespace {

// Single-point sandwich/domination report for `check --family bounds
// --sigma ... --t ...`.
CheckResult bound_point_report(double sigma, double t) {
    const PrecisionContext ctx(40);
    const long wb = ctx.working_bits();
    const int M = 150;

    CheckResult result;
    result.name = "bounds-point";
    result.passed = true;
    double worst = 0.0;
    for (int b : {2, 10}) {
        const DigitSet ds = DigitSet::full(b);
        const MomentTable at_s = build_moment_table(ds, make_s(sigma, t, wb), M, ctx);
        const MomentTable at_sigma = build_moment_table(ds, make_s(sigma, 0, wb), M, ctx);
        const Real bs = pow(Real::from_long(b, wb), Real::from_double(sigma, wb));
        const Real lower = Real::from_long(1, wb) / (bs - Real::from_long(b, wb));
        const Real upper = bs / (bs - Real::from_long(b, wb));
        const Real slack = Real::from_long(1, wb) + Real::exp10_of(-25, wb);
        for (int m = 0; m <= M; ++m) {
            const Real usig = at_sigma.u_star(m).re();
            const Real lhs = abs(at_s.raw_normalized(m));
            const Real rhs = at_sigma.raw_normalized(m).re();
            worst = std::max(worst, (lhs / rhs).to_double());
            if (!(lower < usig) || !(usig <= upper * slack) || !(lhs <= rhs * slack)) {
                result.passed = false;
                result.detail =
                    "violation at b=" + std::to_string(b) + " m=" + std::to_string(m);
            }
        }
    }
    if (result.passed) {
        result.detail = "s = " + sci(sigma) + "+" + sci(t) +
                        "i: sandwich and domination hold for m <= 150; max |c_m(s)|/c_m(sigma) = " +
                        sci(worst);
    }
    return result;
}

}  // namespace

const std::vector<std::string>& check_families() {
    static const std::vector<std::string> families = {
        "zeta",   "levels",     "kempner",  "log2", "moments",
        "bounds", "closedform", "brackets", "mgf",  "terms"};
    return families;
}

std::vector<CheckResult> run_check_family(const std::string& family,
                                          const CheckOptions& options) {
    std::vector<CheckResult> out;
    if (family == "zeta") {
        out.push_back(check_zeta_two_to_hundred_digits());
        out.push_back(check_zeta_oracle_agreement());
        out.push_back(check_base_invariance());
    } else if (family == "levels") {
        out.push_back(check_level_invariance());
    } else if (family == "kempner") {
        out.push_back(check_kempner_no_nine());
    } else if (family == "log2") {
        out.push_back(check_log2_identity());
    } else if (family == "moments") {
        out.push_back(check_constant_sequence());
    } else if (family == "bounds") {
        out.push_back(check_bound_sandwich());
        out.push_back(check_normalized_domination());
        if (options.sigma)
            out.push_back(bound_point_report(*options.sigma, options.t.value_or(0.0)));
    } else if (family == "closedform") {
        out.push_back(check_closed_form_agreement());
    } else if (family == "brackets") {
        out.push_back(check_real_bracketing());
    } else if (family == "mgf") {
        out.push_back(check_mgf_suite());
    } else if (family == "terms") {
        out.push_back(check_term_growth());
    } else {
        std::string known;
        for (const auto& f : check_families()) known += (known.empty() ? "" : ", ") + f;
        throw UsageError("unknown check family '" + family + "' (known: " + known + ")");
    }
    return out;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options) {
    std::vector<CheckResult> out;
    CheckOptions quiet = options;
    quiet.sigma.reset();
    quiet.t.reset();
    for (const auto& family : check_families()) {
        auto batch = run_check_family(family, quiet);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace rzeta

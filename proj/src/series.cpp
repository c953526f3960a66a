#include "rzeta/series.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "rzeta/errors.hpp"
#include "rzeta/gammafn.hpp"

namespace rzeta {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log10_add(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == kNegInf) return a;
    return a + std::log10(1.0 + std::pow(10.0, b - a));
}

void check_level(const DigitSet& ds, int level) {
    if (level < 1) throw UsageError("level must be >= 1");
    // At level 1 the bound ratio is lambda/min(A \ {0}); it reaches 1
    // exactly when 1 and b-1 are both admissible, and the series is
    // then only semi-convergent (no summation procedure implemented).
    if (level == 1 && ds.contains(1) && ds.contains(ds.base() - 1)) {
        throw UnsupportedError(
            "level 1 with digits 1 and b-1 both admissible is semi-convergent; "
            "use level >= 2");
    }
}

void check_abscissa(const DigitSet& ds, double sigma) {
    double abscissa = ds.is_full() ? 1.0 : ds.abscissa();
    if (!(sigma > abscissa)) {
        throw DomainError("Re s = " + std::to_string(sigma) +
                          " is not above the abscissa of convergence log_" +
                          std::to_string(ds.base()) + "(" + std::to_string(ds.count()) +
                          ") = " + std::to_string(abscissa));
    }
}

}  // namespace

TermPlan plan_terms(const DigitSet& ds, const Cplx& s, int level, const Real& eps,
                    int max_terms) {
    check_level(ds, level);
    const std::complex<double> sd(s.re().to_double(), s.im().to_double());
    check_abscissa(ds, sd.real());
    if (!(eps > Real::from_long(0, 64))) throw UsageError("eps must be positive");
    if (max_terms < 2) throw UsageError("max terms must be >= 2");

    const double log10_eps = log10_approx(eps);
    const double sigma = sd.real();
    const double log10_count = std::log10(ds.block_count(level).get_d());
    const double log10_nmin = level >= 2
                                  ? (level - 1) * std::log10(static_cast<double>(ds.base()))
                                  : std::log10(static_cast<double>(ds.min_nonzero_digit()));

    // log10 bound for |term_m| = |s/(s+m)| |u*_m| |P_m|, with
    // |s/(s+m)| <= 1 (sigma > 0) and |P_m| <= count * n_min^{-(sigma+m)}.
    auto bound_at = [&](int m) {
        return log10_bound_u_star(ds, sd, m) + log10_count - (sigma + m) * log10_nmin;
    };

    std::vector<double> bnds;
    bnds.push_back(bound_at(0));
    auto ensure = [&](int m) {
        while (static_cast<int>(bnds.size()) <= m) {
            bnds.push_back(bound_at(static_cast<int>(bnds.size())));
        }
    };

    // The per-step ratio of the bound model is non-increasing in m, so
    // once the ratio at M+1 -> M+2 is below 1 the tail beyond M is
    // geometrically dominated from its first term.
    int M = -1;
    double tail_at_M = 0;
    for (int cand = 1; cand <= max_terms; ++cand) {
        ensure(cand + 2);
        double ratio_log10 = bnds[static_cast<std::size_t>(cand) + 2] -
                             bnds[static_cast<std::size_t>(cand) + 1];
        if (ratio_log10 >= -1e-12) continue;
        double ratio = std::pow(10.0, ratio_log10);
        double tail = bnds[static_cast<std::size_t>(cand) + 1] - std::log10(1.0 - ratio);
        if (tail < log10_eps) {
            M = cand;
            tail_at_M = tail;
            break;
        }
    }
    if (M < 0) {
        throw UnsupportedError("term budget of " + std::to_string(max_terms) +
                               " cannot reach the requested precision; raise --max-terms "
                               "or lower --digits-out");
    }

    TermPlan plan;
    plan.terms = M;
    plan.log10_eps = log10_eps;
    plan.log10_term_bound.assign(bnds.begin(), bnds.begin() + M + 2);
    plan.log10_tail.assign(static_cast<std::size_t>(M) + 1, kNegInf);
    plan.log10_tail[static_cast<std::size_t>(M)] = tail_at_M;
    for (int k = M - 1; k >= 0; --k) {
        plan.log10_tail[static_cast<std::size_t>(k)] =
            log10_add(plan.log10_term_bound[static_cast<std::size_t>(k) + 1],
                      plan.log10_tail[static_cast<std::size_t>(k) + 1]);
    }
    plan.max_term_log10 = kNegInf;
    for (double x : plan.log10_term_bound) plan.max_term_log10 = std::max(plan.max_term_log10, x);

    const double ops = ds.count_below(level).get_d() +
                       ds.block_count(level).get_d() * (M + 2.0) + (M + 2.0) * (M + 2.0) + 64.0;
    plan.guard_digits = 12 + static_cast<int>(std::ceil(std::log10(ops))) +
                        static_cast<int>(std::ceil(std::max(0.0, plan.max_term_log10)));
    return plan;
}

std::vector<Cplx> block_power_sums(const std::vector<std::uint64_t>& block, const Cplx& s,
                                   int M, long bits, int threads) {
    if (block.empty()) throw UsageError("block power sums need a nonempty block");
    if (M < 0) throw UsageError("moment index must be >= 0");

    auto accumulate = [&](std::size_t begin, std::size_t end, std::vector<Cplx>& out) {
        out.assign(static_cast<std::size_t>(M) + 1,
                   Cplx(Real::from_long(0, bits), Real::from_long(0, bits)));
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint64_t n = block[i];
            Cplx x = npow_negs(n, s, bits);
            const Real inv = Real::from_long(1, bits) / Real::from_ulong(n, bits);
            for (int m = 0; m <= M; ++m) {
                out[static_cast<std::size_t>(m)] += x;
                if (m < M) x *= inv;
            }
        }
    };

    int usable = std::max(1, threads);
    if (block.size() < 512 || usable == 1) {
        std::vector<Cplx> sums;
        accumulate(0, block.size(), sums);
        return sums;
    }

    usable = std::min<int>(usable, static_cast<int>(block.size() / 256));
    usable = std::max(usable, 1);
    std::vector<std::vector<Cplx>> partial(static_cast<std::size_t>(usable));
    std::vector<std::thread> workers;
    const std::size_t chunk = (block.size() + usable - 1) / usable;
    for (int tix = 0; tix < usable; ++tix) {
        const std::size_t begin = tix * chunk;
        const std::size_t end = std::min(block.size(), begin + chunk);
        workers.emplace_back([&, tix, begin, end] {
            accumulate(begin, end, partial[static_cast<std::size_t>(tix)]);
        });
    }
    for (auto& w : workers) w.join();

    // fixed chunk-order reduction keeps the result independent of
    // thread scheduling
    std::vector<Cplx> sums = std::move(partial[0]);
    for (int tix = 1; tix < usable; ++tix) {
        for (int m = 0; m <= M; ++m) {
            sums[static_cast<std::size_t>(m)] +=
                partial[static_cast<std::size_t>(tix)][static_cast<std::size_t>(m)];
        }
    }
    return sums;
}

SeriesResult evaluate_series(const DigitSet& ds, const Cplx& s, int level,
                             const PrecisionContext& ctx, int max_terms, int threads) {
    const auto t_start = std::chrono::steady_clock::now();

    // plan against eps/4: the tail and the rounding allowance each stay
    // under a quarter of the reported 10^-target budget
    const Real eps_quarter = Real::exp10_of(-ctx.target_digits - 0.60206, 64);
    const TermPlan plan = plan_terms(ds, s, level, eps_quarter, max_terms);

    PrecisionContext work(ctx.target_digits, std::max(ctx.guard_digits, plan.guard_digits));
    const long wb = work.working_bits();
    const Cplx sw(Real::from_long(0, wb) + s.re(), Real::from_long(0, wb) + s.im());
    const bool real_s = sw.im().is_zero();

    const MomentTable table = build_moment_table(ds, sw, plan.terms, work);
    const std::vector<std::uint64_t> block = ds.block(level);
    const std::vector<Cplx> P = block_power_sums(block, sw, plan.terms, wb, threads);

    Cplx head(Real::from_long(0, wb), Real::from_long(0, wb));
    ds.for_each_below(level, [&](std::uint64_t n) { head += npow_negs(n, sw, wb); });

    Cplx total = head + table.mass * P[0];
    Cplx previous = total;
    Real last_term_abs = Real::from_long(0, wb);
    int used = plan.terms;
    int small_streak = 0;
    double max_over = -1e308;

    for (int m = 1; m <= plan.terms; ++m) {
        const Cplx factor = sw / Cplx(sw.re() + Real::from_long(m, wb), sw.im());
        Cplx term = table.u_star(m) * factor * P[static_cast<std::size_t>(m)];
        previous = total;
        if (m % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
        last_term_abs = abs(term);
        const double term_log10 = log10_approx(last_term_abs);
        max_over = std::max(max_over,
                            term_log10 - plan.log10_term_bound[static_cast<std::size_t>(m)]);
        small_streak = term_log10 < plan.log10_eps ? small_streak + 1 : 0;
        if (small_streak >= 3) {
            // For real s the alternating enclosure bounds the remainder
            // by the last term; for complex s only the planned model
            // tail can certify an early stop.
            if (real_s || plan.log10_tail[static_cast<std::size_t>(m)] < plan.log10_eps) {
                used = m;
                break;
            }
        }
    }

    Real tail = Real::exp10_of(plan.log10_tail[static_cast<std::size_t>(used)], wb);
    if (real_s && last_term_abs < tail) tail = last_term_abs;

    const double ops = ds.count_below(level).get_d() +
                       ds.block_count(level).get_d() * (plan.terms + 2.0) +
                       (plan.terms + 2.0) * (plan.terms + 2.0) + 64.0;
    const Real allowance = Real::exp10_of(
        std::max(0.0, plan.max_term_log10) + std::log10(ops) - work.working_digits() + 2, wb);
    const Real error_bound = tail + allowance;

    SeriesResult result;
    result.value = total;
    result.error_bound = error_bound;
    result.terms_used = used;
    result.level = level;
    result.planned_terms = plan.terms;
    result.guard_digits = work.guard_digits;
    result.max_term_over_bound_log10 = max_over;

    if (real_s) {
        Real lower = min(previous.re(), total.re()) - allowance;
        Real upper = max(previous.re(), total.re()) + allowance;
        lower = max(lower, total.re() - error_bound);
        upper = min(upper, total.re() + error_bound);
        result.bracket = std::make_pair(lower, upper);
    }

    const auto t_end = std::chrono::steady_clock::now();
    result.elapsed_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t_end - t_start)
            .count();
    return result;
}

Real limit_identity_log2(int level, int M, const PrecisionContext& ctx) {
    if (level < 2) throw UsageError("the log 2 identity needs level >= 2");
    if (M < 0) throw UsageError("term count must be >= 0");
    const long wb = ctx.working_bits();
    const DigitSet bits2 = DigitSet::full(2);
    const Cplx one(Real::from_long(1, wb), Real::from_long(0, wb));
    // with s = 1, P_m = sum over the block of n^{-(m+1)}
    const std::vector<Cplx> P = block_power_sums(bits2.block(level), one, M, wb);
    Real total = Real::from_long(0, wb);
    for (int m = 0; m <= M; ++m) {
        Real inner = P[static_cast<std::size_t>(m)].re() / Real::from_long(m + 1, wb);
        if (m % 2 == 0) {
            total += inner;
        } else {
            total -= inner;
        }
    }
    return total;
}

}  // namespace rzeta

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rzeta/complexmp.hpp"
#include "rzeta/digitset.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/precision.hpp"

namespace rzeta {

// A-priori term budget for one (b, A, s, level) evaluation, built
// entirely from the analytic bounds in double/log10 space: no working
// precision is needed to plan, and the plan decides the working
// precision (guard digits scale with term count, block width and the
// cancellation headroom for complex s).
struct TermPlan {
    int terms = 0;         // highest moment index M the plan requires
    int guard_digits = 10; // guard digits the evaluation must carry
    double log10_eps = 0;  // budget the tail was planned against
    // log10 upper bound for |term_m| (index m, valid for 0..terms+1)
    std::vector<double> log10_term_bound;
    // log10 upper bound for |sum of terms with index > m| (0..terms)
    std::vector<double> log10_tail;
    double max_term_log10 = 0;  // peak of the per-term bound model
};

// Smallest M with tail bound below eps, plus the guard-digit policy.
// Preconditions: level >= 2, or level == 1 when the set avoids the
// semi-convergent corner (1 in A together with b-1 in A forces the
// bound ratio lambda/n_min to 1); sigma above the abscissa.
TermPlan plan_terms(const DigitSet& ds, const Cplx& s, int level, const Real& eps,
                    int max_terms);

// P_m = sum over n in block of n^{-(s+m)}, m = 0..M, via one n^{-s}
// evaluation per n and per-n geometric updates. Deterministic
// ascending-n accumulation; `threads` > 1 splits the block into fixed
// chunks whose partial sums are combined in chunk order.
std::vector<Cplx> block_power_sums(const std::vector<std::uint64_t>& block, const Cplx& s,
                                   int M, long bits, int threads = 1);

struct SeriesResult {
    Cplx value;
    Real error_bound;   // rigorous: planned tail + rounding allowance
    int terms_used = 0; // highest moment index actually summed
    int level = 0;
    std::optional<std::pair<Real, Real>> bracket;  // real s only
    double elapsed_ms = 0;
    int planned_terms = 0;
    int guard_digits = 0;
    // max over m of log10|term_m| - log10(planned bound_m); <= 0 when
    // the a-priori model held (tested, not assumed)
    double max_term_over_bound_log10 = -1e308;
};

// K_{b,A,s} (zeta when A is the full alphabet) through the moment
// series at level `level`:
//   head + mass*P_0 + sum_{m>=1} (-1)^m [s/(s+m)] u*_m P_m.
// For real s the alternating partial sums give a rigorous enclosure,
// reported as `bracket` (intersected with value +- error_bound).
SeriesResult evaluate_series(const DigitSet& ds, const Cplx& s, int level,
                             const PrecisionContext& ctx, int max_terms = 100000,
                             int threads = 1);

// The s -> 1 specialization of the level display at b = 2:
//   sum_{m=0..M} (-1)^m/(m+1) * sum_{2^{l-1} <= n < 2^l} n^{-(m+1)},
// which telescopes to log 2 for every level (each inner column sums
// to log((n+1)/n)).
Real limit_identity_log2(int level, int M, const PrecisionContext& ctx);

}  // namespace rzeta

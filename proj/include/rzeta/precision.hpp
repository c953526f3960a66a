#pragma once

#include "rzeta/errors.hpp"
#include "rzeta/real.hpp"

namespace rzeta {

// Bookkeeping for "compute to `target_digits` decimal digits": the
// working precision carries guard digits on top of the target so that
// accumulated roundoff stays below the reported error bound. Guard
// digits are chosen by the series planner (they grow with the term
// count, the block width and the cancellation expected for complex
// arguments); 10 is the floor.
struct PrecisionContext {
    int target_digits = 50;
    int guard_digits = 10;

    PrecisionContext() = default;
    explicit PrecisionContext(int target) : PrecisionContext(target, 10) {}
    PrecisionContext(int target, int guard) : target_digits(target), guard_digits(guard) {
        if (target_digits < 1) throw UsageError("target digits must be positive");
        if (guard_digits < 10) guard_digits = 10;
    }

    int working_digits() const { return target_digits + guard_digits; }
    long working_bits() const { return Real::bits_for_digits(working_digits()); }

    // 10^-target, the error budget the result must beat.
    Real epsilon() const { return Real::exp10_of(-target_digits, working_bits()); }

    PrecisionContext with_extra_guard(int extra) const {
        return PrecisionContext(target_digits, guard_digits + extra);
    }
};

}  // namespace rzeta

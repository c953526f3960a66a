#pragma once

#include <optional>
#include <string>

#include "rzeta/complexmp.hpp"

namespace rzeta {

// Result of one CLI computation, renderable as JSON (stable key set) or
// aligned text. Value strings are fixed-point with `precision` fractional
// digits; the error bound is rounded up so the printed figure stays a bound.
struct RunReport {
    int base = 2;
    std::string digits_spec = "all";
    std::string s_literal = "2";
    int level = 3;
    int precision = 50;
    Cplx value;
    Real error_bound;
    long terms = 0;
    double elapsed_ms = 0.0;
    std::string method = "moment-series";
    std::optional<Real> bracket_lower;
    std::optional<Real> bracket_upper;

    std::string to_json() const;
    std::string to_text() const;
};

// Round-up scientific rendering with `sig` significant digits, so the
// printed number never understates x.
std::string decimal_upper(const Real& x, int sig);

// The s-flag grammar: <sigma> | <sigma>+<t>i | <sigma>-<t>i, plain decimal
// literals (no exponent notation). Parsed exactly at `bits` precision;
// throws UsageError on anything else.
Cplx parse_s_literal(const std::string& text, long bits);

}  // namespace rzeta

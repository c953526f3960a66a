#include "rzeta/report.hpp"

#include <mpfr.h>

#include <cstdio>
#include <sstream>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rzeta/errors.hpp"

namespace rzeta {

namespace {

bool is_plain_decimal(std::string_view v) {
    if (v.empty()) return false;
    bool digit = false;
    bool dot = false;
    for (char c : v) {
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c == '.') {
            if (dot) return false;
            dot = true;
        } else {
            return false;
        }
    }
    return digit;
}

}  // namespace

Cplx parse_s_literal(const std::string& text, long bits) {
    const std::string what =
        "s must be <sigma>, <sigma>+<t>i or <sigma>-<t>i with plain decimal "
        "literals (no exponent notation), got '" +
        text + "'";
    std::string v;
    for (char c : text)
        if (c != ' ') v.push_back(c);
    if (v.empty()) throw UsageError(what);

    const std::size_t start = (v[0] == '+' || v[0] == '-') ? 1 : 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = start; i < v.size(); ++i) {
        if (v[i] == '+' || v[i] == '-') {
            split = i;
            break;
        }
    }

    if (split == std::string::npos) {
        if (!is_plain_decimal(std::string_view(v).substr(start))) throw UsageError(what);
        return Cplx(Real::from_string(v, bits), Real::from_long(0, bits));
    }

    if (v.back() != 'i' || split + 2 > v.size() - 1) throw UsageError(what);
    const std::string re_text = v.substr(0, split);
    const std::string im_text = v.substr(split + 1, v.size() - split - 2);
    if (!is_plain_decimal(std::string_view(re_text).substr(start)) ||
        !is_plain_decimal(im_text))
        throw UsageError(what);
    Real re = Real::from_string(re_text, bits);
    Real im = Real::from_string(im_text, bits);
    if (v[split] == '-') im = -im;
    return Cplx(re, im);
}

std::string decimal_upper(const Real& x, int sig) {
    if (sig < 1) sig = 1;
    char probe[8];
    int needed = mpfr_snprintf(probe, sizeof probe, "%.*RUe", sig - 1, x.raw());
    std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*RUe", sig - 1, x.raw());
    return std::string(buf.data());
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["params"] = {
        {"base", base},
        {"digits", digits_spec},
        {"s", s_literal},
        {"level", level},
        {"precision", precision},
    };
    j["value_re"] = value.re().str_fixed(precision);
    j["value_im"] = value.im().str_fixed(precision);
    j["error_bound"] = decimal_upper(error_bound, 3);
    j["terms"] = terms;
    j["level"] = level;
    j["elapsed_ms"] = elapsed_ms;
    j["method"] = method;
    if (bracket_lower && bracket_upper) {
        j["bracket_lower"] = bracket_lower->str_fixed(precision);
        j["bracket_upper"] = bracket_upper->str_fixed(precision);
    }
    return j.dump(2);
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-12s base=%d digits=%s s=%s level=%d precision=%d\n",
                  "params", base, digits_spec.c_str(), s_literal.c_str(), level, precision);
    out << line;
    out << "value_re     " << value.re().str_fixed(precision) << '\n';
    out << "value_im     " << value.im().str_fixed(precision) << '\n';
    out << "error_bound  " << decimal_upper(error_bound, 3) << '\n';
    if (bracket_lower && bracket_upper) {
        out << "bracket_lo   " << bracket_lower->str_fixed(precision) << '\n';
        out << "bracket_hi   " << bracket_upper->str_fixed(precision) << '\n';
    }
    out << "terms        " << terms << '\n';
    out << "level        " << level << '\n';
    std::snprintf(line, sizeof line, "%-12s %.3f\n", "elapsed_ms", elapsed_ms);
    out << line;
    out << "method       " << method << '\n';
    return out.str();
}

}  // namespace rzeta

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <string>

#include "rzeta/checks.hpp"
#include "rzeta/errors.hpp"
#include "rzeta/moments.hpp"
#include "rzeta/oracle.hpp"
#include "rzeta/report.hpp"
#include "rzeta/series.hpp"

namespace py = pybind11;

namespace {

using namespace rzeta;

int default_level(int base) { return base <= 3 ? 3 : 2; }

// Accepts an exact decimal string (the CLI grammar) or a Python number.
Cplx to_cplx(const py::object& s, long bits) {
    if (py::isinstance<py::str>(s)) return parse_s_literal(s.cast<std::string>(), bits);
    const std::complex<double> z = s.cast<std::complex<double>>();
    return Cplx(Real::from_double(z.real(), bits), Real::from_double(z.imag(), bits));
}

py::dict series_to_dict(const SeriesResult& run, int digits) {
    py::dict out;
    out["value"] = std::complex<double>(run.value.re().to_double(), run.value.im().to_double());
    out["value_re"] = run.value.re().str_fixed(digits);
    out["value_im"] = run.value.im().str_fixed(digits);
    out["error_bound"] = decimal_upper(run.error_bound, 3);
    out["terms"] = run.terms_used;
    out["level"] = run.level;
    out["elapsed_ms"] = run.elapsed_ms;
    out["method"] = "moment-series";
    if (run.bracket) {
        out["bracket_lower"] = run.bracket->first.str_fixed(digits);
        out["bracket_upper"] = run.bracket->second.str_fixed(digits);
    }
    return out;
}

py::dict run_series(const DigitSet& ds, const py::object& s, int digits, int level,
                    int max_terms, int threads) {
    const PrecisionContext ctx(digits);
    const int use_level = level > 0 ? level : default_level(ds.base());
    const SeriesResult run = evaluate_series(ds, to_cplx(s, ctx.working_bits()), use_level,
                                             ctx, max_terms, threads);
    return series_to_dict(run, digits);
}

}  // namespace

PYBIND11_MODULE(_rzeta, m) {
    m.doc() = "arbitrary-precision zeta and digit-restricted Dirichlet sums "
              "via the moment-recurrence series";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_RuntimeError);

    m.def(
        "zeta",
        [](const py::object& s, int digits, int base, int level, int max_terms, int threads) {
            return run_series(DigitSet::full(base), s, digits, level, max_terms, threads);
        },
        py::arg("s"), py::arg("digits") = 50, py::arg("base") = 2, py::arg("level") = 0,
        py::arg("max_terms") = 100000, py::arg("threads") = 1,
        "Riemann zeta via the full-alphabet series; value strings carry "
        "`digits` fractional digits next to a rigorous error bound.");

    m.def(
        "kempner",
        [](int base, const std::string& digit_spec, const py::object& s, int digits,
           int level, int max_terms, int threads) {
            return run_series(DigitSet::parse(digit_spec, base), s, digits, level, max_terms,
                              threads);
        },
        py::arg("base"), py::arg("digit_spec"), py::arg("s"), py::arg("digits") = 50,
        py::arg("level") = 0, py::arg("max_terms") = 100000, py::arg("threads") = 1,
        "Digit-restricted Dirichlet sum K_{b,A,s}; digit_spec as in the CLI "
        "('all', '0-8', '1,3,7', ...).");

    m.def(
        "moments",
        [](int base, const std::string& digit_spec, const py::object& s, int max_m,
           int digits) {
            const PrecisionContext ctx(digits);
            const DigitSet ds = DigitSet::parse(digit_spec, base);
            const MomentTable table =
                build_moment_table(ds, to_cplx(s, ctx.working_bits()), max_m, ctx);
            py::list rows;
            for (int m_idx = 0; m_idx <= max_m; ++m_idx) {
                py::dict row;
                const Cplx u_star = table.u_star(m_idx);
                const Cplx c = table.c(m_idx);
                row["m"] = m_idx;
                row["u_star_re"] = u_star.re().str_sci(digits);
                row["u_star_im"] = u_star.im().str_sci(digits);
                row["normalized_re"] = c.re().str_sci(digits);
                row["normalized_im"] = c.im().str_sci(digits);
                rows.append(row);
            }
            return rows;
        },
        py::arg("base"), py::arg("digit_spec"), py::arg("s"), py::arg("max_m") = 20,
        py::arg("digits") = 30, "Rescaled moment table u*_m with normalized entries c_m.");

    m.def(
        "zeta_reference",
        [](const py::object& s, int digits) {
            const Cplx value = zeta_reference(to_cplx(s, Real::bits_for_digits(digits) + 64),
                                              digits);
            py::dict out;
            out["value"] =
                std::complex<double>(value.re().to_double(), value.im().to_double());
            out["value_re"] = value.re().str_fixed(digits);
            out["value_im"] = value.im().str_fixed(digits);
            return out;
        },
        py::arg("s"), py::arg("digits") = 50,
        "Independent eta-acceleration reference for zeta (Re s > 1).");

    m.def(
        "check",
        [](const std::string& family) {
            const CheckOptions options;
            const auto results =
                family.empty() ? run_all_checks(options) : run_check_family(family, options);
            py::list out;
            for (const auto& r : results) out.append(py::make_tuple(r.name, r.passed, r.detail));
            return out;
        },
        py::arg("family") = std::string(),
        "Run one invariant family (or all); returns (name, passed, detail) tuples.");

    m.def("check_families", [] { return check_families(); },
          "Names accepted by check(family=...).");
}

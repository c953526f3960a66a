#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"

#include "rzeta/errors.hpp"
#include "rzeta/report.hpp"

using namespace rzeta;

TEST_CASE("s-literal grammar accepts the three documented shapes") {
    const long bits = 200;

    auto plain = parse_s_literal("2", bits);
    CHECK(plain.re() == Real::from_long(2, bits));
    CHECK(plain.im().is_zero());

    auto frac = parse_s_literal("2.5", bits);
    CHECK(frac.re() == Real::from_string("2.5", bits));

    auto pos = parse_s_literal("2+3i", bits);
    CHECK(pos.re() == Real::from_long(2, bits));
    CHECK(pos.im() == Real::from_long(3, bits));

    auto neg = parse_s_literal("2.25-0.5i", bits);
    CHECK(neg.im() == Real::from_string("-0.5", bits));

    // signed real part is grammatical (the domain check happens later)
    auto signed_re = parse_s_literal("-1.5+0.25i", bits);
    CHECK(signed_re.re() == Real::from_string("-1.5", bits));
    CHECK(signed_re.im() == Real::from_string("0.25", bits));

    // spaces are cosmetic
    auto spaced = parse_s_literal("2 + 3 i", bits);
    CHECK(spaced.im() == Real::from_long(3, bits));
}

TEST_CASE("s-literal grammar rejects everything else") {
    const long bits = 200;
    for (const char* bad : {"", "i", "3i", "2e5", "1E3", "2+3j", "2+3", "2+i", "2-",
                            "++2", "2..5", "2,5", "abc", "2+3e1i"}) {
        CHECK_THROWS_AS(parse_s_literal(bad, bits), UsageError);
    }
}

TEST_CASE("round-up rendering never understates") {
    auto x = Real::from_string("0.0000123451", 300);
    auto printed = decimal_upper(x, 3);
    auto back = Real::from_string(printed, 300);
    CHECK(back >= x);
    CHECK(back <= x * Real::from_string("1.01", 300));

    auto tiny = Real::exp10_of(-25, 200);
    CHECK(Real::from_string(decimal_upper(tiny, 2), 300) >= tiny);

    auto zero = decimal_upper(Real::from_long(0, 64), 3);
    CHECK(Real::from_string(zero, 64).is_zero());
}

TEST_CASE("report JSON carries the stable key set in order") {
    RunReport rep;
    rep.base = 2;
    rep.digits_spec = "all";
    rep.s_literal = "2";
    rep.level = 3;
    rep.precision = 12;
    rep.value = Cplx::from_doubles(1.5, 0, 128);
    rep.error_bound = Real::exp10_of(-13, 128);
    rep.terms = 42;
    rep.elapsed_ms = 1.0;

    auto doc = nlohmann::ordered_json::parse(rep.to_json());
    const std::vector<std::string> want = {"params",      "value_re", "value_im",
                                           "error_bound", "terms",    "level",
                                           "elapsed_ms",  "method"};
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) keys.push_back(item.key());
    CHECK(keys == want);

    const std::vector<std::string> want_params = {"base", "digits", "s", "level", "precision"};
    std::vector<std::string> param_keys;
    for (const auto& item : doc["params"].items()) param_keys.push_back(item.key());
    CHECK(param_keys == want_params);

    CHECK(doc["value_re"].get<std::string>() == "1.500000000000");
    CHECK(doc["value_im"].get<std::string>() == "0.000000000000");
    CHECK(doc["terms"].get<long>() == 42);
    CHECK(doc["level"].get<int>() == 3);
    CHECK(doc["method"].get<std::string>() == "moment-series");

    // bracket fields appear exactly when both ends are present
    rep.bracket_lower = Real::from_double(1.25, 128);
    rep.bracket_upper = Real::from_double(1.75, 128);
    auto doc2 = nlohmann::ordered_json::parse(rep.to_json());
    CHECK(doc2.size() == want.size() + 2);
    CHECK(doc2.contains("bracket_lower"));
    CHECK(doc2.contains("bracket_upper"));
    CHECK(doc2["bracket_lower"].get<std::string>() == "1.250000000000");
}

TEST_CASE("text rendering mentions the same facts") {
    RunReport rep;
    rep.precision = 6;
    rep.value = Cplx::from_doubles(1.5, -0.25, 128);
    rep.error_bound = Real::exp10_of(-7, 128);
    rep.terms = 7;
    auto txt = rep.to_text();
    CHECK(txt.find("value_re") != std::string::npos);
    CHECK(txt.find("1.500000") != std::string::npos);
    CHECK(txt.find("-0.250000") != std::string::npos);
    CHECK(txt.find("error_bound") != std::string::npos);
    CHECK(txt.find("method") != std::string::npos);
    CHECK(txt.find("moment-series") != std::string::npos);
}

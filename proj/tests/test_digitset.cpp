#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "rzeta/digitset.hpp"
#include "rzeta/errors.hpp"

using namespace rzeta;

namespace {

// Reference membership test, digit by digit — the slow way the odometer
// enumeration must agree with.
bool admissible(std::uint64_t n, const DigitSet& ds) {
    if (n == 0) return false;
    while (n > 0) {
        if (!ds.contains(static_cast<int>(n % ds.base()))) return false;
        n /= static_cast<std::uint64_t>(ds.base());
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TEST_CASE("parse accepts the documented grammar") {
    auto all2 = DigitSet::parse("all", 2);
    CHECK(all2.is_full());
    CHECK(all2.count() == 2);

    auto no9 = DigitSet::parse("0-8", 10);
    CHECK(no9.count() == 9);
    CHECK(no9.count_nonzero() == 8);
    CHECK(no9.max_digit() == 8);
    CHECK_FALSE(no9.contains(9));

    auto sparse = DigitSet::parse("1,3,7", 10);
    CHECK(sparse.digits() == std::vector<int>{1, 3, 7});
    CHECK(sparse.min_nonzero_digit() == 1);

    auto mixed = DigitSet::parse("0,2-4,7", 10);
    CHECK(mixed.digits() == std::vector<int>{0, 2, 3, 4, 7});

    // duplicates collapse silently
    auto dup = DigitSet::parse("1,1,2-3,3", 10);
    CHECK(dup.digits() == std::vector<int>{1, 2, 3});
}

TEST_CASE("parse rejects malformed or unusable specs") {
    CHECK_THROWS_AS(DigitSet::parse("", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("0", 10), UsageError);  // no positive member
    CHECK_THROWS_AS(DigitSet::parse("9", 9), UsageError);   // digit >= base
    CHECK_THROWS_AS(DigitSet::parse("10", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("3-1", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("1,", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse(",1", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("1--3", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("x", 10), UsageError);
    CHECK_THROWS_AS(DigitSet::parse("all", 1), UsageError);
}

TEST_CASE("binary blocks match the hand enumeration") {
    auto full2 = DigitSet::full(2);
    CHECK(full2.block(3) == std::vector<std::uint64_t>{4, 5, 6, 7});
    CHECK(full2.below(3) == std::vector<std::uint64_t>{1, 2, 3});
    CHECK(full2.block(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("repunits in base ten") {
    auto ones = DigitSet::parse("1", 10);
    CHECK(ones.block(3) == std::vector<std::uint64_t>{111});
    CHECK(ones.below(3) == std::vector<std::uint64_t>{1, 11});
    CHECK(ones.block_count(5) == 1);
    CHECK(ones.min_in_block(4) == 1111);
}

TEST_CASE("odometer enumeration agrees with digit filtering") {
    struct Case {
        const char* spec;
        int base;
        int level;
    };
    for (Case c : {Case{"0,2,5", 10, 5}, Case{"1,3", 10, 5}, Case{"0-3", 10, 4},
                   Case{"2,7-9", 10, 4}, Case{"0,2", 3, 7}, Case{"1-4", 5, 6}}) {
        auto ds = DigitSet::parse(c.spec, c.base);
        std::vector<std::uint64_t> got;
        ds.for_each_below(c.level, [&](std::uint64_t n) { got.push_back(n); });
        std::vector<std::uint64_t> want;
        for (std::uint64_t n = 1; n < ipow(static_cast<std::uint64_t>(c.base), c.level - 1); ++n)
            if (admissible(n, ds)) want.push_back(n);
        CHECK(got == want);
    }
}

TEST_CASE("counting matches materialized blocks") {
    auto no9 = DigitSet::parse("0-8", 10);
    CHECK(no9.block_count(2) == 72);  // 8 leading choices x 9 tail digits
    CHECK(no9.count_below(3) == 80);
    CHECK(no9.min_in_block(3) == 100);

    auto sparse = DigitSet::parse("1,3", 10);
    CHECK(sparse.min_in_block(2) == 11);
    CHECK(sparse.block(4).size() == sparse.block_count(4).get_ui());
    CHECK(sparse.below(4).size() == sparse.count_below(4).get_ui());
}

TEST_CASE("power sums are exact") {
    auto s = DigitSet::full(10).power_sums(2);
    CHECK(s[0] == 10);  // 0^0 counts as 1
    CHECK(s[1] == 45);
    CHECK(s[2] == 285);

    auto t = DigitSet::parse("0,2", 3).power_sums(3);
    CHECK(t[0] == 2);
    CHECK(t[1] == 2);
    CHECK(t[2] == 4);
    CHECK(t[3] == 8);
}

TEST_CASE("decay ratio and abscissa") {
    auto no9 = DigitSet::parse("0-8", 10);
    CHECK(no9.lambda_double() == doctest::Approx(8.0 / 9.0));
    CHECK(no9.abscissa() == doctest::Approx(std::log10(9.0)));

    CHECK(DigitSet::full(2).lambda_double() == doctest::Approx(1.0));
    CHECK(DigitSet::full(10).abscissa() == doctest::Approx(1.0));
    CHECK(DigitSet::parse("1", 10).abscissa() == doctest::Approx(0.0));

    auto lam = DigitSet::parse("1,3,7", 10).lambda(128);
    CHECK(lam.to_double() == doctest::Approx(7.0 / 9.0));
}

TEST_CASE("complement") {
    CHECK(DigitSet::parse("0-8", 10).complement().digits() == std::vector<int>{9});
    CHECK(DigitSet::full(7).complement().digits().empty());
    CHECK(DigitSet::parse("1,3", 10).complement().count() == 8);
}

TEST_CASE("canonical text form round-trips") {
    CHECK(DigitSet::full(10).to_string() == "all");
    CHECK(DigitSet::parse("0-8", 10).to_string() == "0-8");
    CHECK(DigitSet::parse("1,3,7", 10).to_string() == "1,3,7");
    CHECK(DigitSet::parse("0,1,2,5", 10).to_string() == "0-2,5");
    for (const char* spec : {"all", "0-8", "1,3,7", "0-2,5", "1-2"}) {
        auto ds = DigitSet::parse(spec, 10);
        CHECK(DigitSet::parse(ds.to_string(), 10).digits() == ds.digits());
    }
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(DigitSet::parse("1", 10).block(20), UnsupportedError);
    CHECK_THROWS_AS(DigitSet::full(2).block(0), UsageError);
    CHECK_THROWS_AS(DigitSet::full(2).block_count(0), UsageError);
}

#include "rzeta/digitset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace rzeta {

namespace {

int parse_digit_token(std::string_view tok, int base) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw UsageError("malformed digit '" + std::string(tok) + "'");
    }
    if (value < 0 || value >= base) {
        throw UsageError("digit " + std::to_string(value) + " out of range for base " +
                         std::to_string(base));
    }
    return value;
}

}  // namespace

DigitSet DigitSet::parse(std::string_view spec, int base) {
    if (base < 2) throw UsageError("base must be >= 2");
    if (spec == "all") return full(base);
    std::vector<int> digits;
    std::size_t pos = 0;
    if (spec.empty()) throw UsageError("empty digit spec");
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string_view item =
            spec.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        if (item.empty()) throw UsageError("empty item in digit spec");
        std::size_t dash = item.find('-');
        if (dash == std::string_view::npos) {
            digits.push_back(parse_digit_token(item, base));
        } else {
            int lo = parse_digit_token(item.substr(0, dash), base);
            int hi = parse_digit_token(item.substr(dash + 1), base);
            if (lo > hi) {
                throw UsageError("backwards range '" + std::string(item) + "' in digit spec");
            }
            for (int d = lo; d <= hi; ++d) digits.push_back(d);
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == spec.size()) throw UsageError("trailing comma in digit spec");
    }
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.empty()) throw UsageError("empty digit set");
    if (digits.size() == 1 && digits[0] == 0) {
        throw UsageError("digit set {0} admits no positive integer");
    }
    return DigitSet(base, std::move(digits));
}

DigitSet DigitSet::full(int base) {
    if (base < 2) throw UsageError("base must be >= 2");
    std::vector<int> digits(base);
    for (int d = 0; d < base; ++d) digits[d] = d;
    return DigitSet(base, std::move(digits));
}

DigitSet DigitSet::from_digits(int base, std::vector<int> digits) {
    if (base < 2) throw UsageError("base must be >= 2");
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    for (int d : digits) {
        if (d < 0 || d >= base) {
            throw UsageError("digit " + std::to_string(d) + " out of range for base " +
                             std::to_string(base));
        }
    }
    return DigitSet(base, std::move(digits));
}

bool DigitSet::contains(int d) const {
    return std::binary_search(digits_.begin(), digits_.end(), d);
}

int DigitSet::max_digit() const {
    if (digits_.empty()) throw DomainError("empty digit set has no maximum");
    return digits_.back();
}

int DigitSet::min_nonzero_digit() const {
    for (int d : digits_)
        if (d != 0) return d;
    throw DomainError("digit set has no nonzero digit");
}

Real DigitSet::lambda(long bits) const {
    return Real::from_long(max_digit(), bits) / Real::from_long(base_ - 1, bits);
}

double DigitSet::lambda_double() const {
    return static_cast<double>(max_digit()) / static_cast<double>(base_ - 1);
}

double DigitSet::abscissa() const {
    return std::log(static_cast<double>(count())) / std::log(static_cast<double>(base_));
}

DigitSet DigitSet::complement() const {
    std::vector<int> rest;
    for (int d = 0; d < base_; ++d)
        if (!contains(d)) rest.push_back(d);
    return DigitSet(base_, std::move(rest));
}

mpz_class DigitSet::block_count(int level) const {
    if (level < 1) throw UsageError("block level must be >= 1");
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(count()),
                  static_cast<unsigned long>(level - 1));
    return c * count_nonzero();
}

mpz_class DigitSet::count_below(int level) const {
    mpz_class total = 0;
    for (int l = 1; l < level; ++l) total += block_count(l);
    return total;
}

mpz_class DigitSet::min_in_block(int level) const {
    if (level < 1) throw UsageError("block level must be >= 1");
    mpz_class n = min_nonzero_digit();
    for (int i = 1; i < level; ++i) n = n * base_ + digits_.front();
    return n;
}

std::vector<mpz_class> DigitSet::power_sums(int m_max) const {
    if (m_max < 0) throw UsageError("power sum index must be >= 0");
    std::vector<mpz_class> sums(static_cast<std::size_t>(m_max) + 1, 0);
    sums[0] = count();
    std::vector<mpz_class> powers(digits_.begin(), digits_.end());
    for (int j = 1; j <= m_max; ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (j > 1) powers[i] *= digits_[i];
            s += powers[i];
        }
        sums[static_cast<std::size_t>(j)] = s;
    }
    return sums;
}

void DigitSet::require_enumerable(int level) const {
    // Enumerated values are uint64; insist b^level < 2^62 so every block
    // member and the incremental odometer updates stay well inside range.
    double bits = level * std::log2(static_cast<double>(base_));
    if (bits > 62.0) {
        throw UnsupportedError("block b^" + std::to_string(level) +
                               " too large to enumerate at base " + std::to_string(base_));
    }
}

std::vector<std::uint64_t> DigitSet::block(int level) const {
    std::vector<std::uint64_t> out;
    out.reserve(128);
    for_each_in_block(level, [&](std::uint64_t n) { out.push_back(n); });
    return out;
}

std::vector<std::uint64_t> DigitSet::below(int level) const {
    std::vector<std::uint64_t> out;
    for_each_below(level, [&](std::uint64_t n) { out.push_back(n); });
    return out;
}

std::string DigitSet::to_string() const {
    if (is_full()) return "all";
    std::string out;
    std::size_t i = 0;
    while (i < digits_.size()) {
        std::size_t j = i;
        while (j + 1 < digits_.size() && digits_[j + 1] == digits_[j] + 1) ++j;
        if (!out.empty()) out += ',';
        if (j > i) {
            out += std::to_string(digits_[i]) + "-" + std::to_string(digits_[j]);
        } else {
            out += std::to_string(digits_[i]);
        }
        i = j + 1;
    }
    return out;
}

}  // namespace rzeta

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rzeta/errors.hpp"
#include "rzeta/real.hpp"

namespace rzeta {

// Radix b together with the admissible digit set A. Blocks of
// admissible integers are enumerated by an odometer over digit
// positions, so sparse digit sets in large bases never pay for the
// integers they exclude.
class DigitSet {
  public:
    // Grammar: "all" | item ("," item)*, item = digit | digit "-" digit,
    // digits written in decimal, ranges inclusive. Rejects digits >= base,
    // empty sets, and the set {0} (no positive integer has those digits).
    static DigitSet parse(std::string_view spec, int base);
    static DigitSet full(int base);
    // Unvalidated beyond base/digit range; accepts {0} and the empty set
    // (the complement set of a full alphabet is empty, and the MGF code
    // sums over such complements).
    static DigitSet from_digits(int base, std::vector<int> digits);

    int base() const { return base_; }
    // Ascending digit list.  The rvalue overload hands the vector out by value
    // so that iterating `something_returning_a_DigitSet().digits()` never
    // dangles.
    const std::vector<int>& digits() const& { return digits_; }
    std::vector<int> digits() && { return std::move(digits_); }
    int count() const { return static_cast<int>(digits_.size()); }       // N
    int count_nonzero() const { return count() - (contains(0) ? 1 : 0); }  // N1
    bool contains(int d) const;
    bool is_full() const { return count() == base_; }
    int max_digit() const;             // f
    int min_nonzero_digit() const;     // smallest admissible 1-digit integer

    // lambda = f/(b-1), the per-moment decay ratio; always in (0, 1].
    Real lambda(long bits) const;
    double lambda_double() const;

    // sigma_c = log_b N, the abscissa the parameter must stay above.
    double abscissa() const;

    // Digits not in A (within {0,...,b-1}); may be empty or {0}.
    DigitSet complement() const;

    // Number of admissible integers in [b^{l-1}, b^l): N1 * N^{l-1}.
    mpz_class block_count(int level) const;
    // Number of admissible integers in (0, b^{l-1}) — the head sum range.
    mpz_class count_below(int level) const;

    // Smallest admissible integer with exactly `level` digits.
    mpz_class min_in_block(int level) const;

    // S_j = sum over a in A of a^j for j = 0..m_max, exact (0^0 = 1).
    std::vector<mpz_class> power_sums(int m_max) const;

    // Ascending enumeration of admissible integers with exactly `level`
    // digits. Values are materialized as uint64, so b^level must fit.
    template <class F>
    void for_each_in_block(int level, F&& f) const {
        if (level < 1) throw UsageError("block level must be >= 1");
        require_enumerable(level);
        std::vector<int> lead;
        for (int d : digits_)
            if (d != 0) lead.push_back(d);
        if (lead.empty()) return;
        if (level == 1) {
            for (int d : lead) f(static_cast<std::uint64_t>(d));
            return;
        }
        std::vector<std::uint64_t> place(level);
        place[level - 1] = 1;
        for (int i = level - 2; i >= 0; --i) place[i] = place[i + 1] * base_;
        std::uint64_t tail_places = 0;
        for (int i = 1; i < level; ++i) tail_places += place[i];

        const std::size_t nd = digits_.size();
        std::vector<std::size_t> idx(level, 0);
        for (int a : lead) {
            std::fill(idx.begin() + 1, idx.end(), 0);
            std::uint64_t n = static_cast<std::uint64_t>(a) * place[0] +
                              static_cast<std::uint64_t>(digits_[0]) * tail_places;
            for (;;) {
                f(n);
                int j = level - 1;
                while (j >= 1) {
                    if (idx[j] + 1 < nd) {
                        n += static_cast<std::uint64_t>(digits_[idx[j] + 1] - digits_[idx[j]]) *
                             place[j];
                        ++idx[j];
                        break;
                    }
                    n -= static_cast<std::uint64_t>(digits_[idx[j]] - digits_[0]) * place[j];
                    idx[j] = 0;
                    --j;
                }
                if (j == 0) break;
            }
        }
    }

    // Ascending enumeration of admissible integers in (0, b^{level-1}):
    // the blocks 1..level-1 in order.
    template <class F>
    void for_each_below(int level, F&& f) const {
        for (int l = 1; l < level; ++l) for_each_in_block(l, f);
    }

    std::vector<std::uint64_t> block(int level) const;
    std::vector<std::uint64_t> below(int level) const;

    // Canonical text form: "all" for the full alphabet, else items with
    // runs of length >= 2 compressed to "lo-hi".
    std::string to_string() const;

  private:
    DigitSet(int base, std::vector<int> digits) : base_(base), digits_(std::move(digits)) {}
    void require_enumerable(int level) const;

    int base_ = 2;
    std::vector<int> digits_;
};

}  // namespace rzeta

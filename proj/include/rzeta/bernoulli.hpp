#pragma once

#include <gmpxx.h>

#include <mutex>
#include <vector>

namespace rzeta {

// Exact rational Bernoulli numbers, filled on demand by the classical
// recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0. Values are exact mpq, so
// the closed-form moment formula built on them loses precision only in
// its final floating-point stage, never here.
class BernoulliCache {
  public:
    // B_n for n >= 0 (odd n > 1 give exact zero). Returned by value:
    // the backing vector may grow under later fills.
    mpq_class number(int n);

    // Convenience for the dominant use: B_{2k}.
    mpq_class even(int k) { return number(2 * k); }

    int filled_up_to() const;

  private:
    void fill_locked(int n);

    mutable std::mutex mu_;
    std::vector<mpq_class> values_;
};

// Process-wide shared cache.
BernoulliCache& bernoulli_cache();

}  // namespace rzeta

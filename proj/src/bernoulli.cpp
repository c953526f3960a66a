#include "rzeta/bernoulli.hpp"

#include <stdexcept>

namespace rzeta {

mpq_class BernoulliCache::number(int n) {
    if (n < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<std::size_t>(n) >= values_.size()) fill_locked(n);
    return values_[static_cast<std::size_t>(n)];
}

int BernoulliCache::filled_up_to() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(values_.size()) - 1;
}

void BernoulliCache::fill_locked(int n) {
    if (values_.empty()) values_.push_back(mpq_class(1));
    for (int m = static_cast<int>(values_.size()); m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            values_.push_back(mpq_class(0));
            continue;
        }
        mpq_class acc(0);
        mpz_class binom;
        for (int j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += mpq_class(binom) * values_[static_cast<std::size_t>(j)];
        }
        acc /= -(m + 1);
        acc.canonicalize();
        values_.push_back(acc);
    }
}

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

}  // namespace rzeta

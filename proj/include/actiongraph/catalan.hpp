#ifndef ACTIONGRAPH_CATALAN_HPP
#define ACTIONGRAPH_CATALAN_HPP

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace actiongraph {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact table of Catalan numbers C_0..C_max, built from the convolution
 * recurrence C_{k+1} = sum_{i=0}^{k} C_i * C_{k-i} with C_0 = 1.
 *
 * A fully built table is safe for concurrent reads; extend() is
 * single-writer and must not race with readers.
 */
class CatalanTable {
public:
    explicit CatalanTable(std::size_t max_index) { extend(max_index); }

    std::size_t max_index() const noexcept { return values_.size() - 1; }

    const BigInt& at(std::size_t k) const {
        if (k >= values_.size())
            throw std::out_of_range("catalan table has no entry for k=" + std::to_string(k));
        return values_[k];
    }

    const std::vector<BigInt>& values() const noexcept { return values_; }

    // Grows the table so that at(new_max) is valid. No-op if already large enough.
    void extend(std::size_t new_max) {
        if (values_.empty()) values_.emplace_back(1);
        while (values_.size() <= new_max) {
            const std::size_t k = values_.size() - 1;  // next entry is C_{k+1}
            BigInt next = 0;
            for (std::size_t i = 0; i <= k; ++i) next += values_[i] * values_[k - i];
            values_.push_back(std::move(next));
        }
    }

private:
    std::vector<BigInt> values_;
};

inline CatalanTable catalan_table(std::size_t max_index) { return CatalanTable(max_index); }

/** C_k via the recurrence. Memoized across calls; thread-safe. */
inline BigInt catalan_recurrence(std::size_t k) {
    static CatalanTable table(0);
    static std::mutex mutex;
    const std::lock_guard<std::mutex> lock(mutex);
    table.extend(k);
    return table.at(k);
}

/**
 * C_k = binomial(2k, k) / (k + 1), evaluated with exact integer steps only
 * (every intermediate division is exact). Shares nothing with the recurrence
 * route, which makes the two usable as cross-checks of each other.
 */
inline BigInt catalan_closed_form(std::size_t k) {
    BigInt binom = 1;  // equals binomial(k + i, i) after step i
    for (std::size_t i = 1; i <= k; ++i) {
        binom *= static_cast<unsigned long long>(k + i);
        binom /= static_cast<unsigned long long>(i);
    }
    return binom / static_cast<unsigned long long>(k + 1);
}

}  // namespace actiongraph

#endif  // ACTIONGRAPH_CATALAN_HPP

#include "bgray/counting.hpp"

#include <stdexcept>

namespace bgray {

void CountTable::grow(std::uint64_t n) const {
    if (values_.empty())
        values_.emplace_back(1); // b(0)
    for (std::uint64_t m = values_.size(); m <= n; ++m) {
        mpz_class next = values_[m - 1];
        if (m % 2 == 0)
            next += values_[m / 2];
        values_.push_back(std::move(next));
    }
}

mpz_class CountTable::bpc(std::uint64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
    return values_[n];
}

void CountTable::reserve(std::uint64_t n) const {
    std::lock_guard<std::mutex> lock(mu_);
    grow(n);
}

std::uint64_t CountTable::size_of_index(const mpz_class& k) const {
    if (k < 1)
        throw std::domain_error("index must be >= 1");
    std::lock_guard<std::mutex> lock(mu_);
    grow(2);
    if (k <= values_[0])
        return 0;
    // Double until b(hi) >= k, then bisect over even n in (lo, hi].
    std::uint64_t hi = 2;
    while (values_[hi] < k) {
        hi *= 2;
        grow(hi);
    }
    std::uint64_t lo = hi / 2; // b(lo) < k (or lo == 1 on the first round)
    while (hi - lo > 2) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        mid -= mid % 2;
        if (values_[mid] < k)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

CountTable& global_count_table() {
    static CountTable table;
    return table;
}

mpz_class bpc(std::uint64_t n) {
    return global_count_table().bpc(n);
}

std::uint64_t size_of_index(const mpz_class& k) {
    return global_count_table().size_of_index(k);
}

} // namespace bgray

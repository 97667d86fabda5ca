#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include <gmpxx.h>

namespace bgray {

// Memoized table of b(n), the number of partitions of n into powers of two:
// b(0) = 1, b(n) = b(n-1) for odd n, b(n) = b(n-1) + b(n/2) for even n.
// The table grows on demand, never shrinks, and is safe to query from
// multiple threads (readers only ever observe fully computed entries).
class CountTable {
  public:
    // b(n).
    mpz_class bpc(std::uint64_t n) const;

    // Least n with k <= b(n); always even since b(2m+1) = b(2m).
    // Grows the table by doubling n until b(n) >= k, then bisects.
    // Throws std::domain_error for k < 1.
    std::uint64_t size_of_index(const mpz_class& k) const;

    // Precompute b(0..n).
    void reserve(std::uint64_t n) const;

  private:
    // Extends values_ through index n.  Caller holds mu_.
    void grow(std::uint64_t n) const;

    mutable std::mutex mu_;
    mutable std::vector<mpz_class> values_;
};

// Process-wide shared table.
CountTable& global_count_table();

// Conveniences over the global table.
mpz_class bpc(std::uint64_t n);
std::uint64_t size_of_index(const mpz_class& k);

} // namespace bgray

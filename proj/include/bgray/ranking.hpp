#pragma once

#include <vector>

#include <gmpxx.h>

#include "bgray/partition.hpp"

namespace bgray {

// The sizes a partition passes through under repeated halve-and-drop-1s:
// taus[m] is the size after m halvings (taus[0] the size itself); trailing
// zeros are omitted, so the empty partition has an empty trail.  All entries
// are positive, even, and strictly decreasing; the partition is recovered by
// d_m = taus[m-1]/2 - taus[m].
struct Trail {
    std::vector<mpz_class> taus;
    friend bool operator==(const Trail&, const Trail&) = default;
};

Trail trail_of(const BinaryPartition& p);

// Inverse of trail_of.  Throws std::domain_error when an entry is odd or
// nonpositive, or a reconstructed digit would be negative.
BinaryPartition partition_from_trail(const Trail& t);

// 1-based position of p in the infinite Gray sequence of even binary
// partitions (the empty partition is at 1).
mpz_class rank(const BinaryPartition& p);

// The partition at position k.  Throws std::domain_error for k < 1.
BinaryPartition unrank(const mpz_class& k);

} // namespace bgray

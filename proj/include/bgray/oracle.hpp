#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bgray/partition.hpp"

namespace bgray {

// A binary partition of n presented with its parts of size 1 made explicit:
// the even part plus a count of 1s padding it up to n.
struct PaddedPartition {
    BinaryPartition even_part;
    std::uint64_t ones = 0;

    mpz_class total() const;

    // Caret text of the even part; with pad=true a trailing `1^ones` token
    // (display only — parse() rejects parts of size 1).
    std::string str(bool pad) const;

    friend auto operator<=>(const PaddedPartition&, const PaddedPartition&) = default;
};

// The Gray sequence of all binary partitions of n, built by direct recursion:
// for odd n, the n-1 sequence with one more 1; for n = 0 mod 4, the n-1
// sequence followed by the doubled n/2 sequence; for n = 2 mod 4 the doubled
// block comes reversed.  Length is exactly bpc(n); starts at the all-1s
// partition.
std::vector<PaddedPartition> gray_B_n(std::uint64_t n);

// First `limit` terms of the infinite sequence of even binary partitions
// (1-based: term 1 is the empty partition).
std::vector<BinaryPartition> gray_prefix(std::uint64_t limit);

// Visits terms 1..limit in order without copying the memoized prefix.
// The callback must not reenter this module.
void gray_prefix_visit(std::uint64_t limit,
                       const std::function<void(std::uint64_t index,
                                                const BinaryPartition&)>& fn);

// First element of the size-n sequence: all 1s.
PaddedPartition closed_Q(std::uint64_t n);

// Last element of the size-n sequence.  For even n = 2^a * b (b odd) this is
// b copies of 2^a; for odd n it gains one more 1.
PaddedPartition closed_S(std::uint64_t n);

// First even partition of size n in the infinite sequence: 2^(n/2) when
// n = 0 mod 4, else S(n-2) plus one part 2.  Requires even n >= 2.
BinaryPartition closed_R(std::uint64_t n);

// Halves every term exactly: levels shift down, the level-1 digit becomes an
// explicit count of 1s.
std::vector<PaddedPartition> halved_view(const std::vector<BinaryPartition>& seq);

// Independent brute force: every partition of n into powers of two (1s
// allowed), by recursion on the largest allowed part.  No use of the Gray
// construction or the counting recurrence.
std::vector<PaddedPartition> enumerate_all(std::uint64_t n);

// Leaf count of the same recursion.
std::uint64_t enumerate_all_count(std::uint64_t n);

// Visitor form: fn(digits) where digits[k] is the count of parts 2^k,
// including k = 0.  The buffer is reused between calls.
template <class F>
void enumerate_all_visit_impl(std::uint64_t remaining, unsigned level,
                              std::vector<digit_t>& digits, F&& fn) {
    if (level == 0) {
        digits[0] = remaining;
        fn(digits);
        digits[0] = 0;
        return;
    }
    std::uint64_t part = std::uint64_t{1} << level;
    for (std::uint64_t c = remaining / part;; --c) {
        digits[level] = c;
        enumerate_all_visit_impl(remaining - c * part, level - 1, digits, fn);
        if (c == 0)
            break;
    }
}

template <class F>
void enumerate_all_visit(std::uint64_t n, F&& fn) {
    unsigned top = 0;
    while ((std::uint64_t{1} << (top + 1)) <= n)
        ++top;
    std::vector<digit_t> digits(top + 1, 0);
    enumerate_all_visit_impl(n, top, digits, fn);
}

} // namespace bgray

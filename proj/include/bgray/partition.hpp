#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bgray {

// Part sizes are powers of two; a "level" k stands for the part 2^k.
using level_t = std::uint32_t;
// d_k: how many parts of size 2^k the partition contains.
using digit_t = std::uint64_t;

struct LevelDigit {
    level_t level;
    digit_t count;
    friend auto operator<=>(const LevelDigit&, const LevelDigit&) = default;
};

enum class PartitionStyle { caret, plus };

// An even binary partition: a multiset of parts, each a power of two >= 2,
// stored sparsely as (level, digit) pairs in strictly descending level order.
// Parts of size 1 are never stored; the empty partition is valid.
class BinaryPartition {
  public:
    BinaryPartition() = default;

    // Accepts "-" (or the symbol for the empty set) alone, a space-separated
    // list of caret tokens `size` or `size^mult`, or a single plus-separated
    // list of parts like "8+8+4+2+2".  Repeated sizes accumulate and the
    // result is canonical regardless of input order.
    // Throws std::invalid_argument for malformed text, multiplicity <= 0, or
    // out-of-range numbers; std::domain_error for parts that are 1 or not a
    // power of two.
    static BinaryPartition parse(std::string_view text);

    // Builds from (level, count) pairs in any order; duplicate levels
    // accumulate.  Levels must be >= 1 and counts >= 1.
    static BinaryPartition from_digits(std::vector<LevelDigit> digits);

    // Canonical text.  Caret style: `size^mult` tokens, descending, with
    // `^mult` omitted when mult is 1.  Plus style: every part listed,
    // descending, joined by '+'.  The empty partition renders "-".
    std::string str(PartitionStyle style = PartitionStyle::caret) const;

    // Sum of all parts; always even.
    mpz_class size() const;

    bool empty() const { return digits_.empty(); }

    // Number of parts of size 2^k; 0 when the level is absent.
    digit_t digit(level_t k) const;

    // Largest / second-largest nonzero level, or 0 when there is none.
    level_t top_level() const;
    level_t second_level() const;

    // Halve every part and discard the resulting 1s: level k -> k-1, the
    // level-1 digit dropped.  Result is again an even binary partition.
    BinaryPartition floor_halved() const;

    // Double every part: level k -> k+1.  floor_halved() undoes it.
    BinaryPartition doubled() const;

    // (level, count) pairs, strictly descending by level.
    const std::vector<LevelDigit>& digits() const { return digits_; }

    friend auto operator<=>(const BinaryPartition&, const BinaryPartition&) = default;

  private:
    std::vector<LevelDigit> digits_;
};

} // namespace bgray

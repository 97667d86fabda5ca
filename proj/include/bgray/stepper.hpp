#pragma once

#include <cstdint>
#include <list>
#include <optional>

#include <gmpxx.h>

#include "bgray/partition.hpp"

namespace bgray {

// The six local transition rules.  With i the largest nonzero level, j the
// second largest (0 if none), and the sign eps = (-1)^(sum of d_k for
// 1 <= k <= i-1):
//   (a) d_i = 1:        remove the top part, two parts one level down
//   (b) d_i odd >= 3:   merge two top parts one level up
//   (c) d_i odd, d_j=1: remove the second part, two parts one level down
//   (d) d_i odd, else:  merge two second parts (j = 0: two 1s make a new 2)
//   (e) d_i even:       split one top part
//   (f) d_i even:       merge two top parts
// Forward steps take {a,b} when eps = -1 and {c,d} when eps = +1 for odd
// d_i ({e} / {f} for even d_i); backward steps swap the sign.
enum class Rule { a, b, c, d, e, f };

char rule_char(Rule r);

enum class StepDirection { forward, backward };

enum class MoveAction { merge, split };

// One applied transition.  `level` is the k of the affected pair
// 2^k+2^k <-> 2^(k+1); a merge at level 0 grows the size by 2 (two implicit
// 1s become a 2), a split at level 0 shrinks it by 2 (a 2 dissolves into
// discarded 1s), every other move is size-preserving.
struct Move {
    Rule rule;
    MoveAction action;
    level_t level;
    int size_delta;
};

// Mutable stepping state over the infinite Gray sequence of even binary
// partitions.  Holds the digits as a doubly-linked list, largest level
// first, so the top two levels are always at hand; successor and predecessor
// are worst-case O(1): each step touches a bounded number of list nodes and
// updates eps by a local sign factor, never rescanning.
//
// Single-owner state: safe to move between threads, not to share.
class GrayCursor {
  public:
    // Starts at the empty partition (term 1).
    GrayCursor() = default;

    explicit GrayCursor(const BinaryPartition& p);

    BinaryPartition partition() const;

    // (-1)^(sum of d_k for 1 <= k <= i-1); +1 for the empty partition.
    int epsilon() const { return eps_; }

    // The rule the next step in the given direction will apply.
    // Throws std::domain_error for backward at the empty partition.
    Rule classify(StepDirection dir) const;

    // Applies one step and returns the move.  Worst-case constant time.
    Move step(StepDirection dir);

    // Optional 1-based position, maintained across steps once set.
    const std::optional<mpz_class>& index() const { return index_; }
    void set_index(mpz_class index) { index_ = std::move(index); }
    void clear_index() { index_.reset(); }

    // Structural node touches (reads, writes, inserts, erases of list nodes)
    // made by the most recent step, and the maximum over all steps since
    // construction or reset.  Bounded by a constant for every rule.
    std::uint64_t last_step_touches() const { return last_touches_; }
    std::uint64_t max_step_touches() const { return max_touches_; }
    void reset_touch_stats() { last_touches_ = max_touches_ = 0; }

  private:
    void touch(std::uint64_t n) { last_touches_ += n; }

    std::list<LevelDigit> levels_; // strictly descending by level
    int eps_ = 1;
    std::optional<mpz_class> index_;
    std::uint64_t last_touches_ = 0;
    std::uint64_t max_touches_ = 0;
};

// One-shot conveniences.
BinaryPartition successor(const BinaryPartition& p);
// Throws std::domain_error at the empty partition (start of the sequence).
BinaryPartition predecessor(const BinaryPartition& p);

} // namespace bgray

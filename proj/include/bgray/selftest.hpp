#pragma once

#include <cstdint>
#include <iosfwd>

namespace bgray {

struct SelftestResult {
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    bool ok() const { return failures == 0; }
};

// Runs the cross-module invariant suite at the given scale (partition sizes
// up to max_n; walk lengths scale with the counts).  Prints one line per
// check group to `out`; returns totals.
SelftestResult run_selftest(std::uint64_t max_n, std::ostream& out);

} // namespace bgray

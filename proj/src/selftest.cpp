#include "bgray/selftest.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>

#include "bgray/counting.hpp"
#include "bgray/oracle.hpp"
#include "bgray/partition.hpp"
#include "bgray/ranking.hpp"
#include "bgray/stepper.hpp"

namespace bgray {

namespace {

struct Reporter {
    std::ostream& out;
    SelftestResult totals;

    void group(const std::string& name, std::uint64_t checks, std::uint64_t failures) {
        totals.checks += checks;
        totals.failures += failures;
        out << (failures == 0 ? "ok   " : "FAIL ") << name << ": " << checks << " checks";
        if (failures != 0)
            out << ", " << failures << " failures";
        out << '\n';
    }
};

// Longest prefix of the infinite sequence that ends on a size-block
// boundary at or below both bpc(max_n) and a hard cap.  Keeps the walks
// proportionate and the per-size rank blocks complete.
std::uint64_t block_limit(std::uint64_t max_n, std::uint64_t cap) {
    std::uint64_t limit = 1;
    for (std::uint64_t n = 2; n <= max_n; n += 2) {
        mpz_class c = bpc(n);
        if (!c.fits_ulong_p() || c.get_ui() > cap)
            break;
        limit = c.get_ui();
    }
    return limit;
}

int definitional_eps(const BinaryPartition& p) {
    if (p.empty())
        return 1;
    digit_t below = 0;
    for (const auto& ld : p.digits())
        below += ld.count;
    below -= p.digits().front().count;
    return below % 2 == 0 ? 1 : -1;
}

// Multiset delta between adjacent padded partitions must be one merge/split
// move: two parts 2^k for one part 2^(k+1), some k >= 0.
bool one_move_apart(const PaddedPartition& x, const PaddedPartition& y) {
    std::map<level_t, long long> delta;
    if (x.ones != y.ones)
        delta[0] = static_cast<long long>(y.ones) - static_cast<long long>(x.ones);
    for (const auto& ld : y.even_part.digits())
        delta[ld.level] += static_cast<long long>(ld.count);
    for (const auto& ld : x.even_part.digits()) {
        delta[ld.level] -= static_cast<long long>(ld.count);
        if (delta[ld.level] == 0)
            delta.erase(ld.level);
    }
    if (delta.size() != 2)
        return false;
    auto lo = delta.begin();
    auto hi = std::next(lo);
    if (hi->first != lo->first + 1)
        return false;
    return (lo->second == -2 && hi->second == 1) || (lo->second == 2 && hi->second == -1);
}

} // namespace

SelftestResult run_selftest(std::uint64_t max_n, std::ostream& out) {
    Reporter r{out, {}};

    // Counting recurrence vs independent enumeration.
    {
        std::uint64_t checks = 0, failures = 0;
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            ++checks;
            if (bpc(n) != enumerate_all_count(n))
                ++failures;
        }
        r.group("counting vs brute force", checks, failures);
    }

    // The constructed sequence: counts, coverage, single-move adjacency,
    // the 1s-prefix shape, and block positions in the infinite sequence.
    {
        std::uint64_t checks = 0, failures = 0;
        for (std::uint64_t n = 0; n <= max_n; n += 2) {
            auto seq = gray_B_n(n);
            ++checks;
            if (mpz_class(seq.size()) != bpc(n))
                ++failures;
            auto sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            auto all = enumerate_all(n);
            std::sort(all.begin(), all.end());
            ++checks;
            if (sorted != all || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                ++failures;
            for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
                ++checks;
                if (!one_move_apart(seq[t], seq[t + 1]))
                    ++failures;
            }
            // All 1-containing terms first, and the first 1-free term (when
            // the sequence leaves them) contains a part 2.
            std::size_t first_free = 0;
            while (first_free < seq.size() && seq[first_free].ones > 0)
                ++first_free;
            ++checks;
            bool shape = true;
            for (std::size_t t = first_free; t < seq.size(); ++t)
                shape = shape && seq[t].ones == 0;
            if (n >= 2 && first_free < seq.size())
                shape = shape && seq[first_free].even_part.digit(1) > 0;
            if (!shape)
                ++failures;
        }
        r.group("sequence construction properties", checks, failures);
    }

    // Closed forms for the first element, last element, and first size-n
    // term, against the constructed sequences.
    {
        std::uint64_t checks = 0, failures = 0;
        for (std::uint64_t n = 0; n <= max_n; n += 2) {
            auto seq = gray_B_n(n);
            ++checks;
            if (!(seq.front() == closed_Q(n)))
                ++failures;
            ++checks;
            if (!(seq.back() == closed_S(n)))
                ++failures;
            if (n >= 2) {
                mpz_class pos = bpc(n - 2) + 1;
                if (pos.fits_ulong_p() && pos.get_ui() <= 2000000) {
                    auto first_of_size = gray_prefix(pos.get_ui());
                    ++checks;
                    if (!(first_of_size.back() == closed_R(n)))
                        ++failures;
                }
            }
        }
        r.group("closed-form endpoints", checks, failures);
    }

    // Loopless stepping against the constructed prefix, with the sign and
    // touch bound checked at every step, then back again.
    {
        std::uint64_t checks = 0, failures = 0;
        std::uint64_t walk = block_limit(max_n, 2000000);
        auto prefix = gray_prefix(walk);
        GrayCursor cursor;
        for (std::uint64_t t = 1; t + 1 <= walk; ++t) {
            cursor.step(StepDirection::forward);
            ++checks;
            if (!(cursor.partition() == prefix[t]) ||
                cursor.epsilon() != definitional_eps(prefix[t]) ||
                cursor.last_step_touches() > 6)
                ++failures;
        }
        for (std::uint64_t t = walk; t-- > 1;) {
            cursor.step(StepDirection::backward);
            ++checks;
            if (!(cursor.partition() == prefix[t - 1]) ||
                cursor.epsilon() != definitional_eps(prefix[t - 1]) ||
                cursor.last_step_touches() > 6)
                ++failures;
        }
        r.group("stepper vs constructed sequence", checks, failures);
    }

    // Step forward then back from sampled positions.
    {
        std::uint64_t checks = 0, failures = 0;
        std::uint64_t walk = block_limit(max_n, 2000000);
        auto prefix = gray_prefix(walk);
        std::mt19937_64 rng(20240818);
        std::uniform_int_distribution<std::uint64_t> pick(0, walk - 1);
        for (int s = 0; s < 5000; ++s) {
            const auto& p = prefix[pick(rng)];
            GrayCursor cursor(p);
            int eps0 = cursor.epsilon();
            cursor.step(StepDirection::forward);
            cursor.step(StepDirection::backward);
            ++checks;
            if (!(cursor.partition() == p) || cursor.epsilon() != eps0)
                ++failures;
        }
        r.group("forward-backward involution", checks, failures);
    }

    // Trails invert and ranks fill each size block exactly.
    {
        std::uint64_t checks = 0, failures = 0;
        std::map<std::uint64_t, std::vector<mpz_class>> ranks_by_size;
        std::uint64_t count = 0;
        std::uint64_t limit = block_limit(max_n, 2000000);
        gray_prefix_visit(limit, [&](std::uint64_t index, const BinaryPartition& p) {
            ++count;
            mpz_class rk = rank(p);
            if (!(partition_from_trail(trail_of(p)) == p) || rk != index ||
                !(unrank(rk) == p))
                ++failures;
            ranks_by_size[p.size().get_ui()].push_back(rk);
        });
        checks += count;
        for (auto& [n, rks] : ranks_by_size) {
            std::sort(rks.begin(), rks.end());
            ++checks;
            mpz_class first = (n == 0) ? mpz_class(1) : mpz_class(bpc(n - 2) + 1);
            bool block = rks.front() == first && rks.back() == bpc(n) &&
                         mpz_class(rks.size()) == mpz_class(rks.back() - rks.front() + 1);
            if (!block)
                ++failures;
        }
        r.group("rank/unrank and trail inversion", checks, failures);
    }

    return r.totals;
}

} // namespace bgray

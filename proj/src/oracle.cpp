#include "bgray/oracle.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

#include "bgray/counting.hpp"

namespace bgray {

namespace {

// The infinite sequence of even binary partitions, memoized as one growing
// prefix.  It is assembled block by block: the size-n block (even n) is the
// doubled size-n/2 sequence — reversed when n = 2 mod 4 — and the size-n
// sequence itself is just the prefix of length b(n), each term padded with
// 1s up to n.  So the doubled blocks concatenate seamlessly and odd sizes
// need no storage of their own.
struct CorePrefix {
    std::mutex mu;
    std::vector<BinaryPartition> cores;
    std::vector<std::uint64_t> sizes; // sizes[i] = sum of parts of cores[i]
    std::uint64_t next_block_n = 2;   // size of the next block to append

    CorePrefix() {
        cores.emplace_back(); // term 1: the empty partition
        sizes.push_back(0);
    }

    static std::uint64_t count_as_u64(std::uint64_t n) {
        mpz_class c = bpc(n);
        if (!c.fits_ulong_p())
            throw std::overflow_error("sequence too long to materialize");
        return c.get_ui();
    }

    // Grows the prefix until it holds at least `target` terms.
    // Caller holds mu.
    void ensure(std::uint64_t target) {
        while (cores.size() < target) {
            std::uint64_t n = next_block_n;
            std::uint64_t half = n / 2;
            std::uint64_t len = count_as_u64(half); // b(n/2) terms to double
            bool reversed = (n % 4 == 2);
            for (std::uint64_t t = 0; t < len; ++t) {
                std::uint64_t idx = reversed ? len - 1 - t : t;
                std::uint64_t ones = half - sizes[idx];
                std::vector<LevelDigit> digits;
                digits.reserve(cores[idx].digits().size() + 1);
                for (const auto& ld : cores[idx].digits())
                    digits.push_back({ld.level + 1, ld.count});
                if (ones > 0)
                    digits.push_back({1, ones});
                cores.push_back(BinaryPartition::from_digits(std::move(digits)));
                sizes.push_back(n);
            }
            next_block_n += 2;
        }
    }
};

CorePrefix& core_prefix() {
    static CorePrefix prefix;
    return prefix;
}

} // namespace

mpz_class PaddedPartition::total() const {
    return even_part.size() + mpz_class(ones);
}

std::string PaddedPartition::str(bool pad) const {
    if (!pad || ones == 0)
        return even_part.str();
    std::string suffix = "1";
    if (ones >= 2)
        suffix += "^" + std::to_string(ones);
    if (even_part.empty())
        return suffix;
    return even_part.str() + " " + suffix;
}

std::vector<PaddedPartition> gray_B_n(std::uint64_t n) {
    auto& prefix = core_prefix();
    std::lock_guard<std::mutex> lock(prefix.mu);
    std::uint64_t len = CorePrefix::count_as_u64(n);
    prefix.ensure(len);
    std::vector<PaddedPartition> out;
    out.reserve(len);
    for (std::uint64_t t = 0; t < len; ++t)
        out.push_back({prefix.cores[t], n - prefix.sizes[t]});
    return out;
}

std::vector<BinaryPartition> gray_prefix(std::uint64_t limit) {
    auto& prefix = core_prefix();
    std::lock_guard<std::mutex> lock(prefix.mu);
    prefix.ensure(limit);
    return {prefix.cores.begin(), prefix.cores.begin() + static_cast<std::ptrdiff_t>(limit)};
}

void gray_prefix_visit(std::uint64_t limit,
                       const std::function<void(std::uint64_t, const BinaryPartition&)>& fn) {
    auto& prefix = core_prefix();
    std::lock_guard<std::mutex> lock(prefix.mu);
    prefix.ensure(limit);
    for (std::uint64_t t = 0; t < limit; ++t)
        fn(t + 1, prefix.cores[t]);
}

PaddedPartition closed_Q(std::uint64_t n) {
    return {BinaryPartition{}, n};
}

PaddedPartition closed_S(std::uint64_t n) {
    if (n == 0)
        return {BinaryPartition{}, 0};
    if (n % 2 == 1) {
        PaddedPartition s = closed_S(n - 1);
        s.ones += 1;
        return s;
    }
    auto a = static_cast<level_t>(std::countr_zero(n));
    std::uint64_t b = n >> a;
    return {BinaryPartition::from_digits({{a, b}}), 0};
}

BinaryPartition closed_R(std::uint64_t n) {
    if (n % 2 != 0 || n < 2)
        throw std::domain_error("first size-n term is defined for even n >= 2 only");
    if (n % 4 == 0)
        return BinaryPartition::from_digits({{1, n / 2}});
    PaddedPartition s = closed_S(n - 2);
    std::vector<LevelDigit> digits = s.even_part.digits();
    digits.push_back({1, 1});
    return BinaryPartition::from_digits(std::move(digits));
}

std::vector<PaddedPartition> halved_view(const std::vector<BinaryPartition>& seq) {
    std::vector<PaddedPartition> out;
    out.reserve(seq.size());
    for (const auto& p : seq)
        out.push_back({p.floor_halved(), p.digit(1)});
    return out;
}

std::vector<PaddedPartition> enumerate_all(std::uint64_t n) {
    std::vector<PaddedPartition> out;
    enumerate_all_visit(n, [&](const std::vector<digit_t>& digits) {
        std::vector<LevelDigit> evens;
        for (std::size_t k = digits.size(); k-- > 1;)
            if (digits[k] > 0)
                evens.push_back({static_cast<level_t>(k), digits[k]});
        out.push_back({BinaryPartition::from_digits(std::move(evens)), digits[0]});
    });
    return out;
}

std::uint64_t enumerate_all_count(std::uint64_t n) {
    std::uint64_t count = 0;
    enumerate_all_visit(n, [&](const std::vector<digit_t>&) { ++count; });
    return count;
}

} // namespace bgray

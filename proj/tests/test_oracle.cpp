#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bgray/counting.hpp"
#include "bgray/oracle.hpp"

using bgray::BinaryPartition;
using bgray::PaddedPartition;
using bgray::bpc;

namespace {

PaddedPartition padded(const std::string& even, std::uint64_t ones) {
    return {BinaryPartition::parse(even), ones};
}

// One merge/split move 2^k+2^k <-> 2^(k+1) apart, k >= 0.
bool one_move_apart(const PaddedPartition& x, const PaddedPartition& y) {
    std::map<bgray::level_t, long long> delta;
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

TEST_CASE("sequence of partitions of n") {
    auto b0 = bgray::gray_B_n(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == padded("-", 0));

    auto b4 = bgray::gray_B_n(4);
    REQUIRE(b4.size() == 4);
    CHECK(b4[0] == padded("-", 4));
    CHECK(b4[1] == padded("2", 2));
    CHECK(b4[2] == padded("2^2", 0));
    CHECK(b4[3] == padded("4", 0));

    auto b8 = bgray::gray_B_n(8);
    REQUIRE(b8.size() == 10);
    CHECK(b8[6] == padded("2^4", 0));
    CHECK(b8[7] == padded("4 2^2", 0));
    CHECK(b8[8] == padded("4^2", 0));
    CHECK(b8[9] == padded("8", 0));

    SUBCASE("odd n appends one more 1") {
        auto b5 = bgray::gray_B_n(5);
        REQUIRE(b5.size() == 4);
        for (std::size_t t = 0; t < 4; ++t) {
            CHECK(b5[t].even_part == b4[t].even_part);
            CHECK(b5[t].ones == b4[t].ones + 1);
        }
    }
}

TEST_CASE("infinite sequence prefix") {
    auto head = bgray::gray_prefix(6);
    REQUIRE(head.size() == 6);
    CHECK(head[0] == BinaryPartition::parse("-"));
    CHECK(head[1] == BinaryPartition::parse("2"));
    CHECK(head[2] == BinaryPartition::parse("2^2"));
    CHECK(head[3] == BinaryPartition::parse("4"));
    CHECK(head[4] == BinaryPartition::parse("4 2"));
    CHECK(head[5] == BinaryPartition::parse("2^3"));

    auto twenty = bgray::gray_prefix(20);
    REQUIRE(twenty.size() == 20);
    CHECK(twenty[17] == BinaryPartition::parse("8 2^2"));
    CHECK(twenty[18] == BinaryPartition::parse("8 4"));
    CHECK(twenty[19] == BinaryPartition::parse("4^3"));

    CHECK(bgray::gray_prefix(1) == std::vector<BinaryPartition>{BinaryPartition()});

    SUBCASE("visit agrees with the materialized prefix") {
        std::uint64_t seen = 0;
        bgray::gray_prefix_visit(20, [&](std::uint64_t index, const BinaryPartition& p) {
            CHECK(p == twenty[index - 1]);
            ++seen;
        });
        CHECK(seen == 20);
    }
}

TEST_CASE("properties for all even n up to 64") {
    for (std::uint64_t n = 0; n <= 64; n += 2) {
        auto seq = bgray::gray_B_n(n);
        CAPTURE(n);
        CHECK(mpz_class(seq.size()) == bpc(n));

        // same multiset of partitions as brute force, no duplicates
        auto sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        auto all = bgray::enumerate_all(n);
        std::sort(all.begin(), all.end());
        CHECK(sorted == all);

        // neighbors one move apart
        for (std::size_t t = 0; t + 1 < seq.size(); ++t)
            CHECK(one_move_apart(seq[t], seq[t + 1]));

        // terms containing 1s form a prefix; the first without them has a 2
        std::size_t first_free = 0;
        while (first_free < seq.size() && seq[first_free].ones > 0)
            ++first_free;
        for (std::size_t t = first_free; t < seq.size(); ++t)
            CHECK(seq[t].ones == 0);
        if (n >= 2 && first_free < seq.size())
            CHECK(seq[first_free].even_part.digit(1) > 0);
    }
}

TEST_CASE("prefix stability and block positions") {
    // the even-part subsequence of the size-n list prefixes the size-m list
    for (std::uint64_t n = 0; n + 2 <= 64; n += 2) {
        auto small = bgray::gray_B_n(n);
        auto large = bgray::gray_B_n(n + 2);
        REQUIRE(small.size() <= large.size());
        for (std::size_t t = 0; t < small.size(); ++t)
            CHECK(small[t].even_part == large[t].even_part);
    }
    // size-n terms of the infinite sequence sit exactly at positions
    // (b(n-2), b(n)]
    mpz_class limit = bpc(64);
    bgray::gray_prefix_visit(limit.get_ui(), [](std::uint64_t index, const BinaryPartition& p) {
        mpz_class size = p.size();
        std::uint64_t n = size.get_ui();
        CHECK(index > (n == 0 ? 0 : mpz_class(bpc(n - 2)).get_ui()));
        CHECK(mpz_class(index) <= bpc(n));
    });
}

TEST_CASE("closed forms") {
    CHECK(bgray::closed_S(12).even_part == BinaryPartition::parse("4^3"));
    CHECK(bgray::closed_S(12).ones == 0);
    CHECK(bgray::closed_R(8) == BinaryPartition::parse("2^4"));
    CHECK(bgray::closed_R(6) == BinaryPartition::parse("4 2"));
    CHECK(bgray::closed_R(2) == BinaryPartition::parse("2"));
    CHECK(bgray::closed_Q(7) == padded("-", 7));
    CHECK(bgray::closed_S(7) == padded("2^3", 1));
    CHECK(bgray::closed_S(0) == padded("-", 0));
    CHECK_THROWS_AS(bgray::closed_R(7), std::domain_error);
    CHECK_THROWS_AS(bgray::closed_R(0), std::domain_error);

    for (std::uint64_t n = 0; n <= 64; n += 2) {
        auto seq = bgray::gray_B_n(n);
        CHECK(seq.front() == bgray::closed_Q(n));
        CHECK(seq.back() == bgray::closed_S(n));
        if (n >= 2) {
            mpz_class pos = bpc(n - 2) + 1;
            auto prefix = bgray::gray_prefix(pos.get_ui());
            CHECK(prefix.back() == bgray::closed_R(n));
        }
    }
}

TEST_CASE("halved view") {
    auto halves = bgray::halved_view(bgray::gray_prefix(4));
    REQUIRE(halves.size() == 4);
    CHECK(halves[0] == padded("-", 0));
    CHECK(halves[1] == padded("-", 1));
    CHECK(halves[2] == padded("-", 2));
    CHECK(halves[3] == padded("2", 0));

    CHECK(bgray::halved_view({BinaryPartition::parse("4^2")}) ==
          std::vector<PaddedPartition>{padded("2^2", 0)});

    // adjacency under the extended move set: one merge/split move, or one
    // part of size 1 added/removed
    auto h = bgray::halved_view(bgray::gray_prefix(10));
    for (std::size_t t = 0; t + 1 < h.size(); ++t) {
        bool plain = one_move_apart(h[t], h[t + 1]);
        bool one_part = h[t].even_part == h[t + 1].even_part &&
                        (h[t].ones + 1 == h[t + 1].ones || h[t].ones == h[t + 1].ones + 1);
        CHECK((plain || one_part));
    }
}

TEST_CASE("brute-force enumeration") {
    auto e0 = bgray::enumerate_all(0);
    REQUIRE(e0.size() == 1);
    CHECK(e0[0] == padded("-", 0));

    auto e4 = bgray::enumerate_all(4);
    std::sort(e4.begin(), e4.end());
    std::vector<PaddedPartition> want = {padded("-", 4), padded("2", 2), padded("2^2", 0),
                                         padded("4", 0)};
    std::sort(want.begin(), want.end());
    CHECK(e4 == want);

    CHECK(bgray::enumerate_all(8).size() == 10);
    CHECK(bgray::enumerate_all_count(8) == 10);
    CHECK(bgray::enumerate_all(7).size() == bgray::enumerate_all_count(7));
}

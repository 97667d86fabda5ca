#include "bgray/ranking.hpp"

#include <limits>
#include <stdexcept>

#include "bgray/counting.hpp"

namespace bgray {

namespace {

std::uint64_t tau_as_u64(const mpz_class& tau) {
    if (!tau.fits_ulong_p())
        throw std::overflow_error("trail entry too large");
    return tau.get_ui();
}

} // namespace

Trail trail_of(const BinaryPartition& p) {
    Trail t;
    if (p.empty())
        return t;
    // taus[m] = sum over levels k > m of d_k * 2^(k-m); stops at the top.
    level_t top = p.top_level();
    t.taus.reserve(top);
    for (level_t m = 0; m < top; ++m) {
        mpz_class tau = 0;
        for (const auto& ld : p.digits()) {
            if (ld.level <= m)
                break;
            mpz_class term = ld.count;
            term <<= (ld.level - m);
            tau += term;
        }
        t.taus.push_back(std::move(tau));
    }
    return t;
}

BinaryPartition partition_from_trail(const Trail& t) {
    std::vector<LevelDigit> digits;
    digits.reserve(t.taus.size());
    for (std::size_t m = 0; m < t.taus.size(); ++m) {
        const mpz_class& tau = t.taus[m];
        if (tau <= 0 || tau % 2 != 0)
            throw std::domain_error("trail entries must be positive and even");
        mpz_class d = tau / 2 - (m + 1 < t.taus.size() ? t.taus[m + 1] : mpz_class(0));
        if (d < 0)
            throw std::domain_error("trail entry exceeds half its predecessor");
        if (d > 0) {
            if (!d.fits_ulong_p())
                throw std::overflow_error("digit too large");
            if (m + 1 > std::numeric_limits<level_t>::max())
                throw std::overflow_error("level too large");
            digits.push_back({static_cast<level_t>(m + 1), d.get_ui()});
        }
    }
    return BinaryPartition::from_digits(std::move(digits));
}

mpz_class rank(const BinaryPartition& p) {
    Trail t = trail_of(p);
    // Fold from the innermost size outward; the empty trail ranks 1.
    mpz_class k = 1;
    for (std::size_t m = t.taus.size(); m-- > 0;) {
        std::uint64_t tau = tau_as_u64(t.taus[m]);
        if (tau % 4 == 0)
            k = bpc(tau - 2) + k;
        else
            k = bpc(tau) + 1 - k;
    }
    return k;
}

BinaryPartition unrank(const mpz_class& k) {
    if (k < 1)
        throw std::domain_error("index must be >= 1");
    Trail t;
    mpz_class rest = k;
    // Peel the outermost size off the index until it reaches the base.
    for (;;) {
        std::uint64_t n = size_of_index(rest);
        if (n == 0)
            break;
        t.taus.emplace_back(n);
        if (n % 4 == 0)
            rest -= bpc(n - 2);
        else
            rest = bpc(n) + 1 - rest;
    }
    return partition_from_trail(t);
}

} // namespace bgray

#include "bgray/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace bgray {

namespace {

constexpr std::string_view kEmptySymbol = "\xe2\x88\x85"; // U+2205

bool all_decimal(std::string_view s) {
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Decodes a part size: a decimal power of two >= 2.  Returns its level.
level_t parse_size(std::string_view tok) {
    if (!all_decimal(tok))
        throw std::invalid_argument("malformed part '" + std::string(tok) + "'");
    mpz_class value(std::string(tok), 10);
    if (value == 1)
        throw std::domain_error("part of size 1 is not allowed (partitions here are even)");
    if (value < 2 || mpz_popcount(value.get_mpz_t()) != 1)
        throw std::domain_error("part '" + std::string(tok) + "' is not a power of two >= 2");
    std::size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
    if (bits - 1 > std::numeric_limits<level_t>::max())
        throw std::invalid_argument("part '" + std::string(tok) + "' is too large");
    return static_cast<level_t>(bits - 1);
}

digit_t parse_mult(std::string_view tok) {
    if (!all_decimal(tok))
        throw std::invalid_argument("malformed multiplicity '" + std::string(tok) + "'");
    digit_t m = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), m);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw std::invalid_argument("multiplicity '" + std::string(tok) + "' is out of range");
    if (m == 0)
        throw std::invalid_argument("multiplicity must be positive");
    return m;
}

void accumulate(std::vector<LevelDigit>& acc, level_t level, digit_t count) {
    for (auto& ld : acc) {
        if (ld.level == level) {
            if (ld.count > std::numeric_limits<digit_t>::max() - count)
                throw std::invalid_argument("multiplicity overflow");
            ld.count += count;
            return;
        }
    }
    acc.push_back({level, count});
}

std::vector<std::string_view> split(std::string_view text, char sep, bool allow_runs) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos)
            next = text.size();
        std::string_view piece = text.substr(pos, next - pos);
        if (!piece.empty())
            out.push_back(piece);
        else if (!allow_runs)
            throw std::invalid_argument("empty part in list");
        pos = next + 1;
    }
    return out;
}

} // namespace

BinaryPartition BinaryPartition::parse(std::string_view text) {
    // Trim surrounding whitespace; inner separators are handled below.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t' ||
                             text.front() == '\n' || text.front() == '\r'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                             text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty partition text (use \"-\" for the empty partition)");
    if (text == "-" || text == kEmptySymbol)
        return {};

    std::vector<LevelDigit> acc;
    std::vector<std::string_view> tokens;
    for (std::string_view piece : split(text, ' ', true))
        for (std::string_view tok : split(piece, '\t', true))
            tokens.push_back(tok);

    if (tokens.size() == 1 && tokens[0].find('+') != std::string_view::npos) {
        // Plus-separated parts: "8+8+4+2+2", no multiplicities.
        for (std::string_view part : split(tokens[0], '+', false)) {
            if (part.find('^') != std::string_view::npos)
                throw std::invalid_argument("'^' is not allowed in a plus-separated list");
            accumulate(acc, parse_size(part), 1);
        }
        return from_digits(std::move(acc));
    }

    for (std::string_view tok : tokens) {
        if (tok == "-" || tok == kEmptySymbol)
            throw std::invalid_argument("empty-partition token mixed with parts");
        if (tok.find('+') != std::string_view::npos)
            throw std::invalid_argument("'+' list cannot be mixed with other tokens");
        std::size_t caret = tok.find('^');
        if (caret == std::string_view::npos) {
            accumulate(acc, parse_size(tok), 1);
        } else {
            level_t level = parse_size(tok.substr(0, caret));
            digit_t mult = parse_mult(tok.substr(caret + 1));
            accumulate(acc, level, mult);
        }
    }
    return from_digits(std::move(acc));
}

BinaryPartition BinaryPartition::from_digits(std::vector<LevelDigit> digits) {
    std::vector<LevelDigit> acc;
    acc.reserve(digits.size());
    for (const auto& ld : digits) {
        if (ld.level == 0)
            throw std::invalid_argument("level 0 (parts of size 1) cannot be stored");
        if (ld.count == 0)
            throw std::invalid_argument("zero digit cannot be stored");
        accumulate(acc, ld.level, ld.count);
    }
    std::sort(acc.begin(), acc.end(),
              [](const LevelDigit& x, const LevelDigit& y) { return x.level > y.level; });
    BinaryPartition p;
    p.digits_ = std::move(acc);
    return p;
}

std::string BinaryPartition::str(PartitionStyle style) const {
    if (digits_.empty())
        return "-";
    std::string out;
    for (const auto& ld : digits_) {
        mpz_class part = mpz_class(1) << ld.level;
        if (style == PartitionStyle::caret) {
            if (!out.empty())
                out += ' ';
            out += part.get_str();
            if (ld.count >= 2) {
                out += '^';
                out += std::to_string(ld.count);
            }
        } else {
            for (digit_t c = 0; c < ld.count; ++c) {
                if (!out.empty())
                    out += '+';
                out += part.get_str();
            }
        }
    }
    return out;
}

mpz_class BinaryPartition::size() const {
    mpz_class total = 0;
    for (const auto& ld : digits_) {
        mpz_class term = ld.count;
        term <<= ld.level;
        total += term;
    }
    return total;
}

digit_t BinaryPartition::digit(level_t k) const {
    for (const auto& ld : digits_) {
        if (ld.level == k)
            return ld.count;
        if (ld.level < k)
            break;
    }
    return 0;
}

level_t BinaryPartition::top_level() const {
    return digits_.empty() ? 0 : digits_.front().level;
}

level_t BinaryPartition::second_level() const {
    return digits_.size() < 2 ? 0 : digits_[1].level;
}

BinaryPartition BinaryPartition::floor_halved() const {
    BinaryPartition out;
    out.digits_.reserve(digits_.size());
    for (const auto& ld : digits_)
        if (ld.level >= 2)
            out.digits_.push_back({ld.level - 1, ld.count});
    return out;
}

BinaryPartition BinaryPartition::doubled() const {
    if (!digits_.empty() && digits_.front().level == std::numeric_limits<level_t>::max())
        throw std::overflow_error("level overflow in doubled()");
    BinaryPartition out;
    out.digits_.reserve(digits_.size());
    for (const auto& ld : digits_)
        out.digits_.push_back({ld.level + 1, ld.count});
    return out;
}

} // namespace bgray

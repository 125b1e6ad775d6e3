#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qalu {

/// Fixed-width bit vector, most-significant bit first.
struct BitVec {
    std::vector<int> bits;

    int width() const { return static_cast<int>(bits.size()); }
    std::uint64_t to_unsigned() const;
    static BitVec from_unsigned(std::uint64_t value, int width);

    friend bool operator==(const BitVec&, const BitVec&) = default;
};

/// Two's-complement value: -2^{w-1} * b_{w-1} + sum 2^j b_j.
std::int64_t twos_value(const BitVec& v);

/// Inverse of twos_value on the representable range.
BitVec encode_twos(std::int64_t value, int width);

std::uint64_t ref_add(std::uint64_t a, std::uint64_t b);
std::int64_t ref_sub(std::uint64_t a, std::uint64_t b);
std::uint64_t ref_mul(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> ref_divmod(std::uint64_t a, std::uint64_t b);

struct DivZeroPattern {
    BitVec quotient;  // N bits, or N+1 with the zero_safe flag bit
    BitVec remainder; // M bits: the untouched low dividend bits
};

/// Output of the long-division circuit when the divisor is zero. The
/// quotient digit for dividend position n reads ~a_{M+n} when M+n <= N-1 and
/// 1 otherwise (M leading ones); the remainder register keeps the dividend's
/// low M bits. With zero_safe the quotient gains a leading flag bit 1.
DivZeroPattern ref_divzero_pattern(int n, int m, std::uint64_t dividend, bool zero_safe);

} // namespace qalu

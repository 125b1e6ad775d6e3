#include "qalu/oracle.hpp"

#include <stdexcept>

namespace qalu {

std::uint64_t BitVec::to_unsigned() const {
    std::uint64_t v = 0;
    for (int b : bits)
        v = (v << 1) | static_cast<std::uint64_t>(b & 1);
    return v;
}

BitVec BitVec::from_unsigned(std::uint64_t value, int width) {
    if (width < 1 || width > 63)
        throw std::invalid_argument("BitVec width out of range");
    if (value >> width)
        throw std::invalid_argument("value does not fit width");
    BitVec v;
    for (int i = width - 1; i >= 0; --i)
        v.bits.push_back(static_cast<int>((value >> i) & 1));
    return v;
}

std::int64_t twos_value(const BitVec& v) {
    if (v.width() < 1)
        throw std::invalid_argument("twos_value: empty bit vector");
    std::int64_t value = v.bits[0] ? -(std::int64_t(1) << (v.width() - 1)) : 0;
    for (int i = 1; i < v.width(); ++i)
        value += std::int64_t(v.bits[static_cast<std::size_t>(i)]) << (v.width() - 1 - i);
    return value;
}

BitVec encode_twos(std::int64_t value, int width) {
    std::int64_t lo = -(std::int64_t(1) << (width - 1));
    std::int64_t hi = (std::int64_t(1) << (width - 1)) - 1;
    if (value < lo || value > hi)
        throw std::out_of_range("encode_twos: value out of range");
    std::uint64_t pattern = static_cast<std::uint64_t>(value) & ((std::uint64_t(1) << width) - 1);
    return BitVec::from_unsigned(pattern, width);
}

std::uint64_t ref_add(std::uint64_t a, std::uint64_t b) { return a + b; }

std::int64_t ref_sub(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

std::uint64_t ref_mul(std::uint64_t a, std::uint64_t b) { return a * b; }

std::pair<std::uint64_t, std::uint64_t> ref_divmod(std::uint64_t a, std::uint64_t b) {
    if (b == 0)
        throw std::invalid_argument("ref_divmod: division by zero");
    return {a / b, a % b};
}

DivZeroPattern ref_divzero_pattern(int n, int m, std::uint64_t dividend, bool zero_safe) {
    if (n < 1 || m < 1 || m > n)
        throw std::invalid_argument("ref_divzero_pattern: bad widths");
    if (dividend >> n)
        throw std::invalid_argument("ref_divzero_pattern: dividend too wide");
    auto a = [&](int j) { return static_cast<int>((dividend >> j) & 1); };
    DivZeroPattern out;
    int top_digit = zero_safe ? n : n - 1;
    for (int k = top_digit; k >= 0; --k)
        out.quotient.bits.push_back(m + k <= n - 1 ? 1 - a(m + k) : 1);
    for (int j = m - 1; j >= 0; --j)
        out.remainder.bits.push_back(a(j));
    return out;
}

} // namespace qalu

#include <doctest.h>

#include "qalu/oracle.hpp"

using namespace qalu;

TEST_CASE("twos_value") {
    CHECK(twos_value(BitVec::from_unsigned(0b000, 3)) == 0);
    CHECK(twos_value(BitVec::from_unsigned(0b100, 3)) == -4);
    CHECK(twos_value(BitVec::from_unsigned(0b101, 3)) == -3);
    CHECK(twos_value(BitVec::from_unsigned(0b1, 1)) == -1);
}

TEST_CASE("encode_twos") {
    CHECK(encode_twos(0, 4).to_unsigned() == 0b0000);
    CHECK(encode_twos(-1, 4).to_unsigned() == 0b1111);
    CHECK(encode_twos(-8, 4).to_unsigned() == 0b1000);
    CHECK(encode_twos(7, 4).to_unsigned() == 0b0111);
    CHECK_THROWS(encode_twos(8, 4));
    CHECK_THROWS(encode_twos(-9, 4));
}

TEST_CASE("encode/value round-trips exhaustively up to width 8") {
    for (int w = 1; w <= 8; ++w) {
        for (std::uint64_t p = 0; p < (std::uint64_t(1) << w); ++p) {
            BitVec v = BitVec::from_unsigned(p, w);
            CHECK(encode_twos(twos_value(v), w) == v);
        }
        std::int64_t lo = -(std::int64_t(1) << (w - 1));
        std::int64_t hi = (std::int64_t(1) << (w - 1)) - 1;
        for (std::int64_t x = lo; x <= hi; ++x)
            CHECK(twos_value(encode_twos(x, w)) == x);
    }
}

TEST_CASE("negation is flip-all-bits plus one, mod 2^w") {
    for (int w = 1; w <= 8; ++w)
        for (std::int64_t x = 0; x < (std::int64_t(1) << (w - 1)); ++x) {
            std::uint64_t mask = (std::uint64_t(1) << w) - 1;
            std::uint64_t pos = encode_twos(x, w).to_unsigned();
            std::uint64_t flipped_plus_one = ((~pos & mask) + 1) & mask;
            if (x > 0)
                CHECK(encode_twos(-x, w).to_unsigned() == flipped_plus_one);
            else
                CHECK(flipped_plus_one == 0);
        }
}

TEST_CASE("reference arithmetic") {
    CHECK(ref_add(5, 3) == 8);
    CHECK(ref_sub(2, 5) == -3);
    CHECK(ref_mul(6, 7) == 42);
    CHECK(ref_divmod(7, 3) == std::pair<std::uint64_t, std::uint64_t>{2, 1});
    CHECK_THROWS(ref_divmod(7, 0));
    for (std::uint64_t a = 0; a < 32; ++a)
        for (std::uint64_t b = 1; b < 8; ++b) {
            auto [q, r] = ref_divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r < b);
        }
}

TEST_CASE("division-by-zero pattern, single divisor digit") {
    // with M = 1 the quotient is 1 followed by the inverted high dividend bits
    DivZeroPattern p = ref_divzero_pattern(3, 1, 0b101, false);
    CHECK(p.quotient.to_unsigned() == 0b101); // 1, ~a_2, ~a_1
    CHECK(p.remainder.to_unsigned() == 0b1);  // low dividend bit survives

    DivZeroPattern q = ref_divzero_pattern(3, 1, 0b010, false);
    CHECK(q.quotient.to_unsigned() == 0b110);
    CHECK(q.remainder.to_unsigned() == 0);
}

TEST_CASE("division-by-zero pattern, wider divisors lead with ones") {
    DivZeroPattern p = ref_divzero_pattern(3, 2, 0b101, false);
    CHECK(p.quotient.to_unsigned() == 0b110); // 1, 1, ~a_2
    CHECK(p.remainder.to_unsigned() == 0b01);
    DivZeroPattern q = ref_divzero_pattern(3, 3, 0b101, false);
    CHECK(q.quotient.to_unsigned() == 0b111);
    CHECK(q.remainder.to_unsigned() == 0b101);
}

TEST_CASE("division-by-zero pattern with the zero-safe flag bit") {
    DivZeroPattern p = ref_divzero_pattern(2, 1, 0b11, true);
    CHECK(p.quotient.width() == 3);
    CHECK((p.quotient.to_unsigned() >> 2) == 1); // flag bit
    DivZeroPattern n1 = ref_divzero_pattern(1, 1, 0b1, false);
    CHECK(n1.quotient.to_unsigned() == 0b1);
    CHECK(n1.remainder.to_unsigned() == 0b1);
}

TEST_CASE("bitvec width checks") {
    CHECK_THROWS(BitVec::from_unsigned(4, 2));
    CHECK(BitVec::from_unsigned(5, 3).bits == std::vector<int>{1, 0, 1});
}

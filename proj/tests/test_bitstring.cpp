#include "doctest.h"

#include <stdexcept>

#include "relaysim/bitstring.hpp"
#include "relaysim/rng.hpp"

using namespace relaysim;

TEST_SUITE("bitstring") {

TEST_CASE("construction and bit access") {
    BitString s(10);
    CHECK(s.size() == 10);
    CHECK(s.is_zero());
    s.set_bit(3, true);
    s.set_bit(9, true);
    CHECK(s.bit(3));
    CHECK(!s.bit(4));
    CHECK(s.to_bit_literal() == "0001000001");
    CHECK_THROWS_AS(s.bit(10), std::out_of_range);
}

TEST_CASE("xor requires equal lengths") {
    BitString a = BitString::from_bit_literal("101");
    BitString b = BitString::from_bit_literal("011");
    CHECK((a ^ b).to_bit_literal() == "110");
    CHECK_THROWS_AS(a ^ BitString(4), std::invalid_argument);
}

TEST_CASE("hex encoding packs bytes LSB first") {
    // bits 0..7 = 10110010 -> byte 0x4d
    CHECK(BitString::from_bit_literal("10110010").to_hex() == "4d");
    CHECK(BitString::from_bit_literal("1").to_hex() == "01");
    CHECK(BitString(0).to_hex() == "");
    CHECK(BitString::from_hex("4d", 8).to_bit_literal() == "10110010");
    CHECK_THROWS_AS(BitString::from_hex("4d", 4), std::invalid_argument);   // wrong length
    CHECK_THROWS_AS(BitString::from_hex("1x", 8), std::invalid_argument);   // bad digit
    CHECK_THROWS_AS(BitString::from_hex("10", 1), std::invalid_argument);   // nonzero padding
}

TEST_CASE("hex round-trip on random strings") {
    BitStream stream(321);
    for (const std::size_t bits : {1u, 7u, 8u, 63u, 64u, 65u, 200u}) {
        const BitString s = BitString::random(bits, stream);
        CHECK(BitString::from_hex(s.to_hex(), bits) == s);
    }
}

TEST_CASE("slice and concat recompose the original") {
    BitStream stream(55);
    const BitString s = BitString::random(150, stream);
    const BitString head = s.slice(0, 40);
    const BitString mid = s.slice(40, 70);
    const BitString tail = s.slice(110, 40);
    CHECK(head.concat(mid).concat(tail) == s);
    CHECK_THROWS_AS(s.slice(140, 20), std::out_of_range);
}

TEST_CASE("random consumes the stream in order") {
    BitStream a(17), b(17);
    const BitString first = BitString::random(70, a);
    const BitString second = BitString::random(30, a);
    // same draws, bit by bit
    for (std::size_t k = 0; k < 70; ++k) CHECK(first.bit(k) == b.next_bit());
    for (std::size_t k = 0; k < 30; ++k) CHECK(second.bit(k) == b.next_bit());
}

TEST_CASE("from_word keeps the low bits") {
    const BitString s = BitString::from_word(0x4d, 8);
    CHECK(s.to_hex() == "4d");
    CHECK(BitString::from_word(~0ULL, 64).to_hex() == "ffffffffffffffff");
    CHECK_THROWS_AS(BitString::from_word(1, 65), std::invalid_argument);
}

TEST_CASE("words expose zero padding") {
    BitString s(70);
    s.set_bit(69, true);
    REQUIRE(s.words().size() == 2);
    CHECK(s.words()[1] == (1ULL << 5));
}

}  // TEST_SUITE

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaysim/rng.hpp"

namespace relaysim {

/// Fixed-length bitstring. Holds key shares, re-randomization strings, nonces,
/// hash digests and tamper masks.
///
/// Bit k lives in word k/64 at position k%64 (LSB-first packing); bits past
/// the logical length are kept zero so that equality and hashing can work on
/// whole words. Hex encoding packs bits into bytes LSB-first and prints the
/// bytes in order as two lowercase digits each.
class BitString {
public:
    BitString() = default;

    /// Zero-filled string of `bits` bits.
    explicit BitString(std::size_t bits) : len_(bits), words_(word_count(bits), 0) {}

    /// Draws `bits` bits from the stream, in stream order (bit 0 first).
    static BitString random(std::size_t bits, BitStream& stream);

    /// Parses the hex form produced by to_hex(). `bits` fixes the length;
    /// padding bits in the last byte must be zero.
    static BitString from_hex(std::string_view hex, std::size_t bits);

    /// Parses a literal like "0110" (bit 0 first). Mostly for tests.
    static BitString from_bit_literal(std::string_view bits01);

    /// Low 'bits' bits of a word, as a string of length `bits` (<= 64).
    static BitString from_word(std::uint64_t value, std::size_t bits);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool bit(std::size_t index) const;
    void set_bit(std::size_t index, bool value);

    bool is_zero() const;

    BitString& operator^=(const BitString& other);
    friend BitString operator^(BitString lhs, const BitString& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const BitString& other) const = default;

    /// Bits [offset, offset+count), as a new string.
    BitString slice(std::size_t offset, std::size_t count) const;

    /// This string followed by `other`.
    BitString concat(const BitString& other) const;

    std::string to_hex() const;
    std::string to_bit_literal() const;

    /// Packed words, LSB-first; padding bits above size() are zero.
    std::span<const std::uint64_t> words() const { return words_; }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
    void clear_padding();

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace relaysim

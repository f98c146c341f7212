#include "relaysim/bitstring.hpp"

#include <stdexcept>

namespace relaysim {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitString BitString::random(std::size_t bits, BitStream& stream) {
    BitString out(bits);
    std::size_t w = 0;
    std::size_t remaining = bits;
    while (remaining >= 64) {
        out.words_[w++] = stream.next_bits(64);
        remaining -= 64;
    }
    if (remaining > 0) out.words_[w] = stream.next_bits(static_cast<int>(remaining));
    return out;
}

BitString BitString::from_hex(std::string_view hex, std::size_t bits) {
    const std::size_t bytes = (bits + 7) / 8;
    if (hex.size() != 2 * bytes)
        throw std::invalid_argument("BitString::from_hex: length mismatch");
    BitString out(bits);
    for (std::size_t b = 0; b < bytes; ++b) {
        const int hi = hex_digit(hex[2 * b]);
        const int lo = hex_digit(hex[2 * b + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("BitString::from_hex: bad digit");
        const std::uint64_t value = static_cast<std::uint64_t>(hi * 16 + lo);
        out.words_[b / 8] |= value << (8 * (b % 8));
    }
    for (std::size_t k = bits; k < 8 * bytes; ++k)
        if ((out.words_[k / 64] >> (k % 64)) & 1)
            throw std::invalid_argument("BitString::from_hex: nonzero padding");
    out.clear_padding();
    return out;
}

BitString BitString::from_bit_literal(std::string_view bits01) {
    BitString out(bits01.size());
    for (std::size_t k = 0; k < bits01.size(); ++k) {
        if (bits01[k] == '1')
            out.set_bit(k, true);
        else if (bits01[k] != '0')
            throw std::invalid_argument("BitString::from_bit_literal: bad char");
    }
    return out;
}

BitString BitString::from_word(std::uint64_t value, std::size_t bits) {
    if (bits > 64) throw std::invalid_argument("BitString::from_word: bits > 64");
    BitString out(bits);
    if (bits > 0) out.words_[0] = (bits == 64) ? value : (value & ((1ULL << bits) - 1));
    return out;
}

bool BitString::bit(std::size_t index) const {
    if (index >= len_) throw std::out_of_range("BitString::bit");
    return (words_[index / 64] >> (index % 64)) & 1;
}

void BitString::set_bit(std::size_t index, bool value) {
    if (index >= len_) throw std::out_of_range("BitString::set_bit");
    const std::uint64_t mask = 1ULL << (index % 64);
    if (value)
        words_[index / 64] |= mask;
    else
        words_[index / 64] &= ~mask;
}

bool BitString::is_zero() const {
    for (const std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

BitString& BitString::operator^=(const BitString& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitString: XOR length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitString BitString::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > len_) throw std::out_of_range("BitString::slice");
    BitString out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t src = offset + k;
        if ((words_[src / 64] >> (src % 64)) & 1) out.words_[k / 64] |= 1ULL << (k % 64);
    }
    return out;
}

BitString BitString::concat(const BitString& other) const {
    BitString out(len_ + other.len_);
    out.words_.assign(out.words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w];
    for (std::size_t k = 0; k < other.len_; ++k) {
        const std::size_t dst = len_ + k;
        if ((other.words_[k / 64] >> (k % 64)) & 1) out.words_[dst / 64] |= 1ULL << (dst % 64);
    }
    return out;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t bytes = (len_ + 7) / 8;
    std::string out;
    out.reserve(2 * bytes);
    for (std::size_t b = 0; b < bytes; ++b) {
        const unsigned value = static_cast<unsigned>((words_[b / 8] >> (8 * (b % 8))) & 0xFF);
        out.push_back(digits[value >> 4]);
        out.push_back(digits[value & 0xF]);
    }
    return out;
}

std::string BitString::to_bit_literal() const {
    std::string out;
    out.reserve(len_);
    for (std::size_t k = 0; k < len_; ++k) out.push_back(bit(k) ? '1' : '0');
    return out;
}

void BitString::clear_padding() {
    if (len_ % 64 != 0 && !words_.empty())
        words_.back() &= (1ULL << (len_ % 64)) - 1;
}

}  // namespace relaysim

#pragma once

#include <cstdint>

namespace relaysim {

/// SplitMix64 finalizer. All simulator randomness and both hash families are
/// built from this one mixing function so that every value in the system is
/// reproducible bit-for-bit from a 64-bit seed.
constexpr std::uint64_t mix64(std::uint64_t u) {
    u = (u ^ (u >> 30)) * 0xBF58476D1CE4E5B9ULL;
    u = (u ^ (u >> 27)) * 0x94D049BB133111EBULL;
    u = u ^ (u >> 31);
    return u;
}

/// SplitMix64 word generator: state advances by the golden-ratio increment,
/// each output is mix64 of the new state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform draw in [0, 1), using the top 53 bits of one output word.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform draw in [0, bound) by rejection. bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Serves the SplitMix64 output as a continuous bit stream. Bits are consumed
/// from each 64-bit word least-significant-bit first; a string of L bits takes
/// the next L bits of the stream with no word-boundary padding.
class BitStream {
public:
    explicit BitStream(std::uint64_t seed) : gen_(seed) {}

    bool next_bit() {
        if (avail_ == 0) refill();
        const bool b = buf_ & 1;
        buf_ >>= 1;
        --avail_;
        return b;
    }

    /// Next `count` bits (count <= 64), packed LSB-first into the result.
    std::uint64_t next_bits(int count) {
        std::uint64_t out = 0;
        int got = 0;
        while (got < count) {
            if (avail_ == 0) refill();
            const int take = (count - got < avail_) ? count - got : avail_;
            const std::uint64_t mask = (take == 64) ? ~0ULL : ((1ULL << take) - 1);
            out |= (buf_ & mask) << got;
            buf_ = (take == 64) ? 0 : (buf_ >> take);
            avail_ -= take;
            got += take;
        }
        return out;
    }

private:
    void refill() {
        buf_ = gen_.next();
        avail_ = 64;
    }

    SplitMix64 gen_;
    std::uint64_t buf_ = 0;
    int avail_ = 0;
};

}  // namespace relaysim

#include "relaysim/hashing.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "relaysim/rng.hpp"

namespace relaysim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

BitString digest_from_words(const std::vector<std::uint64_t>& words, std::size_t d) {
    BitString out(d);
    for (std::size_t k = 0; k < d; ++k)
        if ((words[k / 64] >> (k % 64)) & 1) out.set_bit(k, true);
    return out;
}

BitString default_nonlinear_hash(const BitString& message, std::size_t d) {
    const std::size_t length = message.size();

    // One 1 bit then zeros, so messages of different lengths or trailing
    // zeros cannot collide at the padding stage.
    const std::size_t padded_words = (length + 1 + 63) / 64;
    std::vector<std::uint64_t> padded(padded_words, 0);
    const auto msg_words = message.words();
    for (std::size_t w = 0; w < msg_words.size(); ++w) padded[w] = msg_words[w];
    padded[length / 64] |= 1ULL << (length % 64);

    std::uint64_t u = mix64(kGolden ^ static_cast<std::uint64_t>(length));
    for (const std::uint64_t w : padded) u = mix64(u ^ w);

    std::vector<std::uint64_t> squeezed((d + 63) / 64);
    for (std::size_t k = 0; k < squeezed.size(); ++k)
        squeezed[k] = mix64(u + (static_cast<std::uint64_t>(k) + 1) * kGolden);
    return digest_from_words(squeezed, d);
}

BitString linear_test_hash(const BitString& message, std::size_t d, std::uint64_t seed) {
    const auto msg_words = message.words();
    BitString out(d);
    for (std::size_t r = 0; r < d; ++r) {
        int parity = 0;
        for (std::size_t c = 0; c < msg_words.size(); ++c) {
            const std::uint64_t row_word =
                mix64(seed + 0x100000001ULL * static_cast<std::uint64_t>(r) +
                      static_cast<std::uint64_t>(c));
            parity ^= std::popcount(row_word & msg_words[c]) & 1;
        }
        if (parity) out.set_bit(r, true);
    }
    return out;
}

}  // namespace

BitString hash(const HashSpec& spec, const BitString& message) {
    if (spec.output_bits < 1) throw std::invalid_argument("hash: output_bits must be positive");
    switch (spec.family) {
        case HashFamily::DefaultNonlinear:
            return default_nonlinear_hash(message, spec.output_bits);
        case HashFamily::LinearTest:
            return linear_test_hash(message, spec.output_bits, spec.seed);
    }
    throw std::invalid_argument("hash: unknown family");
}

const char* hash_family_name(HashFamily family) {
    switch (family) {
        case HashFamily::DefaultNonlinear:
            return "default";
        case HashFamily::LinearTest:
            return "linear-test";
    }
    return "unknown";
}

}  // namespace relaysim

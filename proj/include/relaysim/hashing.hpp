#pragma once

#include <cstdint>

#include "relaysim/bitstring.hpp"

namespace relaysim {

/// The verification sub-protocol needs a hash whose output differences
/// H[x] ^ H[x ^ e] are unpredictable without knowing x. Two families are
/// provided: the nonlinear default, and a GF(2)-linear hash that violates the
/// requirement on purpose (H[x] ^ H[x ^ e] = H[e] for every x), so the attack
/// it enables can be demonstrated.
enum class HashFamily {
    DefaultNonlinear,
    LinearTest,
};

/// Hash selector: family, digest length in bits, and the matrix seed used by
/// the linear-test family (ignored by the default family).
struct HashSpec {
    HashFamily family = HashFamily::DefaultNonlinear;
    std::size_t output_bits = 64;
    std::uint64_t seed = 0;

    HashSpec with_output_bits(std::size_t d) const {
        HashSpec out = *this;
        out.output_bits = d;
        return out;
    }
};

/// Digest of `message`, exactly spec.output_bits long.
///
/// DefaultNonlinear: pad with a single 1 bit then 0 bits to a multiple of 64;
/// pack words LSB-first; absorb u <- mix64(u ^ word) starting from
/// u = mix64(0x9E3779B97F4A7C15 ^ L); squeeze words
/// mix64(u + (k+1)*0x9E3779B97F4A7C15) and truncate to d bits.
///
/// LinearTest: digest bit r is the parity of the AND of the message with a
/// pseudorandom d x L matrix row whose word c is mix64(seed + 0x100000001*r + c).
BitString hash(const HashSpec& spec, const BitString& message);

const char* hash_family_name(HashFamily family);

}  // namespace relaysim

#pragma once

#include <cstdint>
#include <optional>

#include "relaysim/bitstring.hpp"
#include "relaysim/hashing.hpp"

namespace relaysim {

/// A relayed key split for the verification exchange, front to back:
/// s1a masks the nonce, s1b masks the s3-hash, s2 masks the nonce-hash reply,
/// and s3 is the payload the parties keep if verification succeeds.
struct KeyPartition {
    BitString s1a;
    BitString s1b;
    BitString s2;
    BitString s3;

    std::size_t ell() const { return s1a.size() + s1b.size() + s2.size() + s3.size(); }
    std::size_t ell_1a() const { return s1a.size(); }
    std::size_t ell_1b() const { return s1b.size(); }
    std::size_t ell_2() const { return s2.size(); }
    std::size_t ell_3() const { return s3.size(); }

    bool same_layout(const KeyPartition& other) const {
        return ell_1a() == other.ell_1a() && ell_1b() == other.ell_1b() &&
               ell_2() == other.ell_2() && ell_3() == other.ell_3();
    }

    /// s1a || s1b || s2 || s3, the original key.
    BitString joined() const { return s1a.concat(s1b).concat(s2).concat(s3); }
};

/// Splits key s into (s1a, s1b, s2, s3) from the front; s3 gets the rest and
/// must be nonempty.
KeyPartition split_key(const BitString& s, std::size_t ell_1a, std::size_t ell_1b,
                       std::size_t ell_2);

/// The adversary's whole attack, summarized as the XOR difference it induced
/// between the two parties' keys, partitioned to match the key layout.
struct TamperString {
    BitString e1a;
    BitString e1b;
    BitString e2;
    BitString e3;

    static TamperString zeros(const KeyPartition& layout);
    BitString joined() const { return e1a.concat(e1b).concat(e2).concat(e3); }
};

/// other = partition XOR tamper, segment by segment.
KeyPartition apply_tamper(const KeyPartition& partition, const TamperString& tamper);

/// What each party concluded, plus the two wire messages for transcript-level
/// tests. reply is absent when the responder aborted (silence; the initiator
/// then rejects).
struct VerificationOutcome {
    bool bob_accepts = false;
    bool alice_accepts = false;
    BitString first_message;
    std::optional<BitString> reply;
};

/// The key-verification exchange. Alice draws a nonce r (ell_1a bits, from
/// the seeded stream) and sends (r || H[s3]) ^ s1. Bob decrypts with his s1',
/// accepts iff the hash slot matches H[s3'], and replies H[r'] ^ s2'. Alice
/// decrypts with s2 and accepts iff the value is H[r]. The s3-hash is taken
/// at ell_1b output bits and the nonce-hash at ell_2, both from spec's family.
VerificationOutcome run_verification(const KeyPartition& alice, const KeyPartition& bob,
                                     const HashSpec& spec, std::uint64_t seed);

/// Oracle forgery against Bob's check: with full knowledge of s3, the e1b
/// that makes Bob accept alongside tamper e3 is H[s3] ^ H[s3 ^ e3]. Under the
/// linear-test hash this collapses to H[e3], independent of s3 — the weakness
/// the hash requirement exists to rule out. spec.output_bits must be ell_1b.
BitString attack_forge_bob(const BitString& alice_s3, const BitString& e3,
                           const HashSpec& spec);

/// Impersonation attack on Alice: true iff `guess` (an ell_2-bit string sent
/// in place of Bob's reply) would be accepted, i.e. equals s2 ^ H[r].
/// nonce_hash is H[r] at ell_2 output bits.
bool attack_impersonate_bob(const BitString& guess, const KeyPartition& alice,
                            const BitString& nonce_hash);

}  // namespace relaysim

#include "relaysim/verification.hpp"

#include <stdexcept>

#include "relaysim/rng.hpp"

namespace relaysim {

KeyPartition split_key(const BitString& s, std::size_t ell_1a, std::size_t ell_1b,
                       std::size_t ell_2) {
    const std::size_t head = ell_1a + ell_1b + ell_2;
    if (head >= s.size())
        throw std::invalid_argument("split_key: nothing left for s3");
    KeyPartition out;
    out.s1a = s.slice(0, ell_1a);
    out.s1b = s.slice(ell_1a, ell_1b);
    out.s2 = s.slice(ell_1a + ell_1b, ell_2);
    out.s3 = s.slice(head, s.size() - head);
    return out;
}

TamperString TamperString::zeros(const KeyPartition& layout) {
    return TamperString{BitString(layout.ell_1a()), BitString(layout.ell_1b()),
                        BitString(layout.ell_2()), BitString(layout.ell_3())};
}

KeyPartition apply_tamper(const KeyPartition& partition, const TamperString& tamper) {
    return KeyPartition{partition.s1a ^ tamper.e1a, partition.s1b ^ tamper.e1b,
                        partition.s2 ^ tamper.e2, partition.s3 ^ tamper.e3};
}

VerificationOutcome run_verification(const KeyPartition& alice, const KeyPartition& bob,
                                     const HashSpec& spec, std::uint64_t seed) {
    if (!alice.same_layout(bob))
        throw std::invalid_argument("run_verification: partition layouts differ");

    const HashSpec h_payload = spec.with_output_bits(alice.ell_1b());
    const HashSpec h_nonce = spec.with_output_bits(alice.ell_2());

    VerificationOutcome out;

    // Alice: nonce plus payload hash, one-time-padded with s1.
    BitStream stream(seed);
    const BitString nonce = BitString::random(alice.ell_1a(), stream);
    out.first_message =
        nonce.concat(hash(h_payload, alice.s3)) ^ alice.s1a.concat(alice.s1b);

    // Bob: decrypt with his s1, check the hash slot against his own payload.
    const BitString bob_nonce = out.first_message.slice(0, bob.ell_1a()) ^ bob.s1a;
    const BitString bob_hash = out.first_message.slice(bob.ell_1a(), bob.ell_1b()) ^ bob.s1b;
    out.bob_accepts = (bob_hash == hash(h_payload, bob.s3));
    if (!out.bob_accepts) return out;  // abort: silence, Alice will reject

    out.reply = hash(h_nonce, bob_nonce) ^ bob.s2;

    // Alice: decrypt with s2, check the nonce hash.
    out.alice_accepts = ((*out.reply ^ alice.s2) == hash(h_nonce, nonce));
    return out;
}

BitString attack_forge_bob(const BitString& alice_s3, const BitString& e3,
                           const HashSpec& spec) {
    if (e3.size() != alice_s3.size())
        throw std::invalid_argument("attack_forge_bob: e3 length must match s3");
    return hash(spec, alice_s3) ^ hash(spec, alice_s3 ^ e3);
}

bool attack_impersonate_bob(const BitString& guess, const KeyPartition& alice,
                            const BitString& nonce_hash) {
    if (guess.size() != alice.ell_2() || nonce_hash.size() != alice.ell_2())
        throw std::invalid_argument("attack_impersonate_bob: length mismatch");
    return guess == (alice.s2 ^ nonce_hash);
}

}  // namespace relaysim

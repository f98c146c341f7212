#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "relaysim/hashing.hpp"
#include "relaysim/rng.hpp"

using namespace relaysim;

namespace {

std::string golden_path(const std::string& name) {
    return std::string(RELAYSIM_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("hashing") {

TEST_CASE("default family matches the frozen test vectors") {
    std::ifstream in(golden_path("hash_vectors.txt"));
    REQUIRE(in.good());
    std::string line;
    int vectors = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::size_t msg_bits, digest_bits;
        std::string msg_hex, digest_hex;
        fields >> msg_bits >> msg_hex >> digest_bits >> digest_hex;
        const BitString msg =
            msg_hex == "-" ? BitString(0) : BitString::from_hex(msg_hex, msg_bits);
        const HashSpec spec{HashFamily::DefaultNonlinear, digest_bits, 0};
        CHECK(hash(spec, msg).to_hex() == digest_hex);
        ++vectors;
    }
    CHECK(vectors >= 5);
}

TEST_CASE("default family digest length is exact") {
    BitStream stream(1);
    for (const std::size_t d : {1u, 5u, 8u, 63u, 64u, 65u, 128u, 200u}) {
        const HashSpec spec{HashFamily::DefaultNonlinear, d, 0};
        CHECK(hash(spec, BitString::random(50, stream)).size() == d);
    }
}

TEST_CASE("default family separates length and trailing zeros") {
    const HashSpec spec{HashFamily::DefaultNonlinear, 64, 0};
    CHECK(hash(spec, BitString(8)) != hash(spec, BitString(9)));
    CHECK(hash(spec, BitString(0)) != hash(spec, BitString(64)));
}

TEST_CASE("linear-test family is GF(2)-linear") {
    const HashSpec spec{HashFamily::LinearTest, 16, 7};
    BitStream stream(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const BitString a = BitString::random(100, stream);
        const BitString b = BitString::random(100, stream);
        CHECK((hash(spec, a) ^ hash(spec, b)) == hash(spec, a ^ b));
    }
}

TEST_CASE("linear-test family maps zero to zero") {
    const HashSpec spec{HashFamily::LinearTest, 32, 99};
    CHECK(hash(spec, BitString(77)).is_zero());
}

TEST_CASE("linear-test family depends on its matrix seed") {
    BitStream stream(5);
    const BitString msg = BitString::random(64, stream);
    const HashSpec a{HashFamily::LinearTest, 32, 1};
    const HashSpec b{HashFamily::LinearTest, 32, 2};
    CHECK(hash(a, msg) != hash(b, msg));
}

TEST_CASE("with_output_bits changes only the digest length") {
    const HashSpec spec{HashFamily::DefaultNonlinear, 64, 0};
    const HashSpec shorter = spec.with_output_bits(16);
    BitStream stream(8);
    const BitString msg = BitString::random(40, stream);
    // truncation: the short digest is a prefix of the long one
    CHECK(hash(shorter, msg) == hash(spec, msg).slice(0, 16));
}

}  // TEST_SUITE

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relaysim/bitstring.hpp"
#include "relaysim/topology.hpp"

namespace relaysim {

/// XOR masks the adversary applies to long-distance strings in transit.
/// Edge (row, layer) carries r_{row,layer}: layer 0 is sender -> city 1,
/// layer j in 1..m-1 is city j -> city j+1, layer m is city m -> receiver.
class TamperPlan {
public:
    TamperPlan() = default;

    void add_mask(int row, int layer, BitString mask);
    bool empty() const { return masks_.empty(); }

    /// Throws if any entry names an edge outside the spec or has a mask of
    /// the wrong length.
    void validate(const NetworkSpec& spec) const;

    const BitString* mask_for(int row, int layer) const;

private:
    std::map<std::pair<int, int>, BitString> masks_;
};

/// Every string sent during one protocol run, as delivered (tamper masks
/// already applied), plus bandwidth counters.
///
/// edge[j][i-1] is the layer-j string of row i. intra[j-1][i-1][k-1] is
/// q_{i,j}^{(k)}, generated by v_{i,j} for v_{k,j}; the diagonal k == i is
/// unused and left empty.
struct Transcript {
    std::vector<std::vector<BitString>> edge;
    std::vector<std::vector<std::vector<BitString>>> intra;
    std::uint64_t intercity_bits = 0;
    std::uint64_t intracity_bits = 0;

    /// Line-oriented text form: "edge <layer> <i> <hex>" then
    /// "intra <city> <i> <k> <hex>", in index order.
    std::string to_text() const;
};

/// Result of one relay run. s is the sender's key (XOR of the strings it
/// generated); s_prime is the receiver's key (XOR of the layer-m strings as
/// delivered). They agree exactly when nothing was tampered with.
struct RunOutcome {
    BitString s;
    BitString s_prime;
    Transcript transcript;
};

/// The randomness a run consumes: the sender's n strings and each city's
/// n*(n-1) re-randomization strings. Drawn from one stream in protocol order
/// (sender strings first, then q strings city-major in (j, i, k) order), or
/// supplied explicitly for exhaustive-enumeration tests.
struct RelayRandomness {
    std::vector<BitString> sender_strings;
    std::vector<std::vector<std::vector<BitString>>> q;

    static RelayRandomness draw(const NetworkSpec& spec, std::uint64_t seed);
};

/// Runs the relay protocol: the sender splits a random key into n XOR shares,
/// each city refreshes the shares with pairwise random strings (preserving
/// the XOR-sum), and the receiver reassembles from the final layer.
RunOutcome run_relay(const NetworkSpec& spec, const CompromisePattern& pattern,
                     const RelayRandomness& randomness, const TamperPlan& tamper = {});

RunOutcome run_relay(const NetworkSpec& spec, const CompromisePattern& pattern,
                     std::uint64_t seed, const TamperPlan& tamper = {});

/// The strings incident to dishonest nodes: exactly what the adversary saw.
struct AdversaryView {
    std::vector<std::vector<std::optional<BitString>>> edge;
    std::vector<std::vector<std::vector<std::optional<BitString>>>> intra;
    CompromisePattern pattern;

    /// Canonical text encoding (known strings in index order); two views are
    /// distributed identically iff these encodings are.
    std::string canonical_text() const;
};

/// Restricts a transcript to the strings a dishonest set can see: an edge
/// string is visible iff its sender or receiver is dishonest (the endpoints
/// never are); q_{i,j}^{(k)} is visible iff v_{i,j} or v_{k,j} is.
AdversaryView extract_view(const RunOutcome& outcome, const CompromisePattern& pattern);

/// The reconstruction attack: if any layer is fully visible, its XOR is the
/// key. Returns the key when some layer is complete, nothing otherwise.
std::optional<BitString> adversary_reconstruct(const AdversaryView& view,
                                               const NetworkSpec& spec);

}  // namespace relaysim

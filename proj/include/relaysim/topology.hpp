#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace relaysim {

/// Dimensions of the chain-of-cities network: m cities of n relay nodes each,
/// plus the two endpoints. Within a city every pair of nodes shares a cheap
/// link; node v_{i,j} has a long-distance link to v_{i,j+1}; the sender is
/// linked to all of city 1 and the receiver to all of city m. Share strings
/// are ell bits long.
class NetworkSpec {
public:
    NetworkSpec(int cities, int nodes_per_city, int share_bits);

    int m() const { return m_; }
    int n() const { return n_; }
    int ell() const { return ell_; }

    int node_count() const { return m_ * n_; }

    /// Long-distance edges: n per city boundary, plus n sender links and
    /// n receiver links.
    int intercity_edge_count() const { return n_ * (m_ + 1); }

    /// Complete-graph edges inside each city.
    int intracity_edge_count() const { return m_ * n_ * (n_ - 1) / 2; }

    /// Flat index of node v_{i,j}; city-major, 1-based i and j.
    int node_index(int i, int j) const;

private:
    int m_;
    int n_;
    int ell_;
};

/// Convenience factory matching the dimensional contract of NetworkSpec.
inline NetworkSpec build_network(int cities, int nodes_per_city, int share_bits) {
    return NetworkSpec(cities, nodes_per_city, share_bits);
}

/// Address of relay node v_{i,j}: i is the within-city index in 1..n, j the
/// city index in 1..m. The endpoints are not relay nodes and have no address.
struct NodeAddress {
    int i = 1;
    int j = 1;

    bool in_range(const NetworkSpec& spec) const {
        return i >= 1 && i <= spec.n() && j >= 1 && j <= spec.m();
    }

    bool operator==(const NodeAddress&) const = default;
};

/// Honest/dishonest assignment for every relay node. The endpoints are always
/// honest and are not represented here.
class CompromisePattern {
public:
    /// All-honest pattern for the given dimensions.
    CompromisePattern(int cities, int nodes_per_city);

    int m() const { return m_; }
    int n() const { return n_; }

    bool matches(const NetworkSpec& spec) const { return m_ == spec.m() && n_ == spec.n(); }

    bool dishonest(int i, int j) const;
    bool dishonest(NodeAddress node) const { return dishonest(node.i, node.j); }
    void set_dishonest(int i, int j, bool value);
    void set_dishonest(NodeAddress node, bool value) { set_dishonest(node.i, node.j, value); }

    int dishonest_count() const;

    /// m*n characters, '0' honest / '1' dishonest, city-major order.
    std::string to_string() const;
    static CompromisePattern from_string(std::string_view text, int cities, int nodes_per_city);

    bool operator==(const CompromisePattern&) const = default;

private:
    int index(int i, int j) const;

    int m_;
    int n_;
    std::vector<std::uint8_t> flags_;
};

/// Each node dishonest independently with probability (1-t). One PRNG word is
/// drawn per node in city-major order and mapped to [0,1) via the top 53 bits.
CompromisePattern sample_pattern_bernoulli(const NetworkSpec& spec, double t, std::uint64_t seed);

/// Exactly floor((1-t)*m*n) dishonest nodes, chosen uniformly without
/// replacement by a seeded Fisher-Yates shuffle of the node indices.
CompromisePattern sample_pattern_fixed_fraction(const NetworkSpec& spec, double t,
                                                std::uint64_t seed);

/// True iff the adversary can read a complete share layer: some stage
/// j in 1..m-1 has, in every row i, a dishonest node at (i,j) or (i,j+1);
/// or city 1 or city m is fully dishonest (those cities see the sender's or
/// receiver's layer directly, which matters only for m = 1 since for m >= 2
/// a fully dishonest end city already covers an adjacent stage).
bool has_cut(const NetworkSpec& spec, const CompromisePattern& pattern);

}  // namespace relaysim

#include "relaysim/topology.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "relaysim/rng.hpp"

namespace relaysim {

NetworkSpec::NetworkSpec(int cities, int nodes_per_city, int share_bits)
    : m_(cities), n_(nodes_per_city), ell_(share_bits) {
    if (cities < 1) throw std::invalid_argument("NetworkSpec: need at least one city");
    if (nodes_per_city < 1) throw std::invalid_argument("NetworkSpec: need at least one node per city");
    if (share_bits < 1) throw std::invalid_argument("NetworkSpec: share length must be positive");
}

int NetworkSpec::node_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > m_)
        throw std::out_of_range("NetworkSpec::node_index");
    return (j - 1) * n_ + (i - 1);
}

CompromisePattern::CompromisePattern(int cities, int nodes_per_city)
    : m_(cities), n_(nodes_per_city) {
    if (cities < 1 || nodes_per_city < 1)
        throw std::invalid_argument("CompromisePattern: bad dimensions");
    flags_.assign(static_cast<std::size_t>(m_) * n_, 0);
}

int CompromisePattern::index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > m_)
        throw std::out_of_range("CompromisePattern: node address out of range");
    return (j - 1) * n_ + (i - 1);
}

bool CompromisePattern::dishonest(int i, int j) const { return flags_[index(i, j)] != 0; }

void CompromisePattern::set_dishonest(int i, int j, bool value) {
    flags_[index(i, j)] = value ? 1 : 0;
}

int CompromisePattern::dishonest_count() const {
    return std::accumulate(flags_.begin(), flags_.end(), 0);
}

std::string CompromisePattern::to_string() const {
    std::string out;
    out.reserve(flags_.size());
    for (const std::uint8_t f : flags_) out.push_back(f ? '1' : '0');
    return out;
}

CompromisePattern CompromisePattern::from_string(std::string_view text, int cities,
                                                 int nodes_per_city) {
    CompromisePattern out(cities, nodes_per_city);
    if (text.size() != out.flags_.size())
        throw std::invalid_argument("CompromisePattern::from_string: length mismatch");
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1')
            out.flags_[k] = 1;
        else if (text[k] != '0')
            throw std::invalid_argument("CompromisePattern::from_string: bad char");
    }
    return out;
}

namespace {

void check_probability(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("honesty probability t must lie in [0,1]");
}

}  // namespace

CompromisePattern sample_pattern_bernoulli(const NetworkSpec& spec, double t, std::uint64_t seed) {
    check_probability(t);
    CompromisePattern out(spec.m(), spec.n());
    SplitMix64 gen(seed);
    const double p_dishonest = 1.0 - t;
    for (int j = 1; j <= spec.m(); ++j)
        for (int i = 1; i <= spec.n(); ++i)
            out.set_dishonest(i, j, gen.next_unit() < p_dishonest);
    return out;
}

CompromisePattern sample_pattern_fixed_fraction(const NetworkSpec& spec, double t,
                                                std::uint64_t seed) {
    check_probability(t);
    const int total = spec.node_count();
    // Tolerance absorbs the binary representation of t: (1-0.9)*10 evaluates
    // to 0.999...98 but the intended count is 1.
    const int dishonest =
        static_cast<int>(std::floor((1.0 - t) * static_cast<double>(total) + 1e-9));

    std::vector<int> order(total);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 gen(seed);
    for (int k = total - 1; k > 0; --k) {
        const int swap_with = static_cast<int>(gen.next_below(static_cast<std::uint64_t>(k) + 1));
        std::swap(order[k], order[swap_with]);
    }

    CompromisePattern out(spec.m(), spec.n());
    for (int k = 0; k < dishonest; ++k) {
        const int i = order[k] % spec.n() + 1;
        const int j = order[k] / spec.n() + 1;
        out.set_dishonest(i, j, true);
    }
    return out;
}

bool has_cut(const NetworkSpec& spec, const CompromisePattern& pattern) {
    if (!pattern.matches(spec)) throw std::invalid_argument("has_cut: pattern/spec mismatch");

    const auto city_full = [&](int j) {
        for (int i = 1; i <= spec.n(); ++i)
            if (!pattern.dishonest(i, j)) return false;
        return true;
    };

    if (city_full(1) || city_full(spec.m())) return true;

    for (int j = 1; j < spec.m(); ++j) {
        bool covered = true;
        for (int i = 1; i <= spec.n(); ++i) {
            if (!pattern.dishonest(i, j) && !pattern.dishonest(i, j + 1)) {
                covered = false;
                break;
            }
        }
        if (covered) return true;
    }
    return false;
}

}  // namespace relaysim

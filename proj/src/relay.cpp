#include "relaysim/relay.hpp"

#include <sstream>
#include <stdexcept>

#include "relaysim/rng.hpp"

namespace relaysim {

void TamperPlan::add_mask(int row, int layer, BitString mask) {
    auto key = std::make_pair(row, layer);
    auto it = masks_.find(key);
    if (it != masks_.end())
        it->second ^= mask;  // two masks on one edge compose by XOR
    else
        masks_.emplace(key, std::move(mask));
}

void TamperPlan::validate(const NetworkSpec& spec) const {
    for (const auto& [key, mask] : masks_) {
        const auto [row, layer] = key;
        if (row < 1 || row > spec.n() || layer < 0 || layer > spec.m())
            throw std::invalid_argument("TamperPlan: no such edge");
        if (static_cast<int>(mask.size()) != spec.ell())
            throw std::invalid_argument("TamperPlan: mask length must equal share length");
    }
}

const BitString* TamperPlan::mask_for(int row, int layer) const {
    auto it = masks_.find(std::make_pair(row, layer));
    return it == masks_.end() ? nullptr : &it->second;
}

std::string Transcript::to_text() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < edge.size(); ++j)
        for (std::size_t i = 0; i < edge[j].size(); ++i)
            out << "edge " << j << ' ' << (i + 1) << ' ' << edge[j][i].to_hex() << '\n';
    for (std::size_t j = 0; j < intra.size(); ++j)
        for (std::size_t i = 0; i < intra[j].size(); ++i)
            for (std::size_t k = 0; k < intra[j][i].size(); ++k) {
                if (i == k) continue;
                out << "intra " << (j + 1) << ' ' << (i + 1) << ' ' << (k + 1) << ' '
                    << intra[j][i][k].to_hex() << '\n';
            }
    return out.str();
}

RelayRandomness RelayRandomness::draw(const NetworkSpec& spec, std::uint64_t seed) {
    const int n = spec.n();
    const int m = spec.m();
    const std::size_t ell = static_cast<std::size_t>(spec.ell());

    BitStream stream(seed);
    RelayRandomness out;
    out.sender_strings.reserve(n);
    for (int i = 0; i < n; ++i) out.sender_strings.push_back(BitString::random(ell, stream));

    out.q.assign(m, std::vector<std::vector<BitString>>(n, std::vector<BitString>(n)));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                out.q[j][i][k] = BitString::random(ell, stream);
            }
    return out;
}

namespace {

void check_randomness(const NetworkSpec& spec, const RelayRandomness& randomness) {
    const std::size_t n = static_cast<std::size_t>(spec.n());
    const std::size_t ell = static_cast<std::size_t>(spec.ell());
    if (randomness.sender_strings.size() != n ||
        randomness.q.size() != static_cast<std::size_t>(spec.m()))
        throw std::invalid_argument("run_relay: randomness dimensions do not match spec");
    for (const auto& r : randomness.sender_strings)
        if (r.size() != ell) throw std::invalid_argument("run_relay: bad sender string length");
    for (const auto& city : randomness.q) {
        if (city.size() != n)
            throw std::invalid_argument("run_relay: randomness dimensions do not match spec");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == k) continue;
                if (city[i][k].size() != ell)
                    throw std::invalid_argument("run_relay: bad q string length");
            }
    }
}

}  // namespace

RunOutcome run_relay(const NetworkSpec& spec, const CompromisePattern& pattern,
                     const RelayRandomness& randomness, const TamperPlan& tamper) {
    if (!pattern.matches(spec)) throw std::invalid_argument("run_relay: pattern/spec mismatch");
    tamper.validate(spec);
    check_randomness(spec, randomness);

    const int n = spec.n();
    const int m = spec.m();
    const std::size_t ell = static_cast<std::size_t>(spec.ell());

    RunOutcome out;
    out.transcript.edge.assign(m + 1, std::vector<BitString>(n));
    out.transcript.intra.assign(m, std::vector<std::vector<BitString>>(n, std::vector<BitString>(n)));

    const auto deliver = [&](int row, int layer, BitString value) {
        if (const BitString* mask = tamper.mask_for(row + 1, layer)) value ^= *mask;
        out.transcript.intercity_bits += ell;
        out.transcript.edge[layer][row] = std::move(value);
    };

    // Sender: n random shares, XOR-sum is the key.
    out.s = BitString(ell);
    for (int i = 0; i < n; ++i) {
        out.s ^= randomness.sender_strings[i];
        deliver(i, 0, randomness.sender_strings[i]);
    }

    // Each city folds pairwise random strings into the shares. Every q enters
    // the layer sum twice, so the XOR-sum telescopes through unchanged.
    for (int j = 1; j <= m; ++j) {
        const auto& q = randomness.q[j - 1];
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                out.transcript.intra[j - 1][i][k] = q[i][k];
                out.transcript.intracity_bits += ell;
            }
        for (int i = 0; i < n; ++i) {
            BitString share = out.transcript.edge[j - 1][i];
            for (int k = 0; k < n; ++k) {
                if (k == i) continue;
                share ^= q[i][k];
                share ^= q[k][i];
            }
            deliver(i, j, std::move(share));
        }
    }

    out.s_prime = BitString(ell);
    for (int i = 0; i < n; ++i) out.s_prime ^= out.transcript.edge[m][i];
    return out;
}

RunOutcome run_relay(const NetworkSpec& spec, const CompromisePattern& pattern,
                     std::uint64_t seed, const TamperPlan& tamper) {
    return run_relay(spec, pattern, RelayRandomness::draw(spec, seed), tamper);
}

std::string AdversaryView::canonical_text() const {
    std::ostringstream out;
    for (std::size_t j = 0; j < edge.size(); ++j)
        for (std::size_t i = 0; i < edge[j].size(); ++i)
            if (edge[j][i])
                out << "edge " << j << ' ' << (i + 1) << ' ' << edge[j][i]->to_hex() << '\n';
    for (std::size_t j = 0; j < intra.size(); ++j)
        for (std::size_t i = 0; i < intra[j].size(); ++i)
            for (std::size_t k = 0; k < intra[j][i].size(); ++k)
                if (intra[j][i][k])
                    out << "intra " << (j + 1) << ' ' << (i + 1) << ' ' << (k + 1) << ' '
                        << intra[j][i][k]->to_hex() << '\n';
    return out.str();
}

AdversaryView extract_view(const RunOutcome& outcome, const CompromisePattern& pattern) {
    const int m = static_cast<int>(outcome.transcript.edge.size()) - 1;
    const int n = m >= 0 && !outcome.transcript.edge.empty()
                      ? static_cast<int>(outcome.transcript.edge[0].size())
                      : 0;
    if (pattern.m() != m || pattern.n() != n)
        throw std::invalid_argument("extract_view: pattern/transcript mismatch");

    AdversaryView view{.edge = {}, .intra = {}, .pattern = pattern};
    view.edge.assign(m + 1, std::vector<std::optional<BitString>>(n));
    view.intra.assign(m, std::vector<std::vector<std::optional<BitString>>>(
                             n, std::vector<std::optional<BitString>>(n)));

    for (int j = 0; j <= m; ++j)
        for (int i = 1; i <= n; ++i) {
            const bool sender_dishonest = j > 0 && pattern.dishonest(i, j);
            const bool receiver_dishonest = j < m && pattern.dishonest(i, j + 1);
            if (sender_dishonest || receiver_dishonest)
                view.edge[j][i - 1] = outcome.transcript.edge[j][i - 1];
        }

    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k) {
                if (i == k) continue;
                if (pattern.dishonest(i, j) || pattern.dishonest(k, j))
                    view.intra[j - 1][i - 1][k - 1] = outcome.transcript.intra[j - 1][i - 1][k - 1];
            }
    return view;
}

std::optional<BitString> adversary_reconstruct(const AdversaryView& view,
                                               const NetworkSpec& spec) {
    if (view.pattern.m() != spec.m() || view.pattern.n() != spec.n())
        throw std::invalid_argument("adversary_reconstruct: view/spec mismatch");
    for (const auto& layer : view.edge) {
        bool complete = true;
        for (const auto& value : layer)
            if (!value) {
                complete = false;
                break;
            }
        if (!complete) continue;
        BitString key(static_cast<std::size_t>(spec.ell()));
        for (const auto& value : layer) key ^= *value;
        return key;
    }
    return std::nullopt;
}

}  // namespace relaysim

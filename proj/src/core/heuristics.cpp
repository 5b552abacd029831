#include "heuristics.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace frc {

ClopenSet hashmax_rule(const GroupCtx& ctx, const Window& F, int radius, int bit_cap) {
    require_same_ctx(ctx, F.ctx, "hashmax_rule");
    if (F.empty()) throw Error(ErrorCode::precondition, "hashmax_rule: F must be nonempty");
    if (F.contains(identity(ctx)))
        throw Error(ErrorCode::precondition, "hashmax_rule: identity element in F");
    Window B = ball(ctx, radius);
    std::vector<GroupElement> neighbors;
    for (const auto& sigma : F.elems) {
        neighbors.push_back(sigma);
        GroupElement inv = inverse(sigma);
        if (!(inv == sigma)) neighbors.push_back(inv);
    }
    Window W = B;
    for (const auto& sigma : neighbors) W = window_union(W, translate(B, sigma));
    if ((int)W.size() > bit_cap)
        throw Error(ErrorCode::cap_exceeded, "hashmax_rule: window exceeds enumeration cap");

    std::vector<int> center_idx(B.size());
    for (std::size_t j = 0; j < B.size(); ++j) center_idx[j] = W.index_of(B.elems[j]);
    std::vector<std::vector<int>> nbr_idx;
    for (const auto& sigma : neighbors) {
        std::vector<int> idx(B.size());
        for (std::size_t j = 0; j < B.size(); ++j) idx[j] = W.index_of(mul(B.elems[j], sigma));
        nbr_idx.push_back(std::move(idx));
    }
    auto read = [](Pattern a, const std::vector<int>& idx) {
        Pattern v = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) v |= ((a >> idx[j]) & 1u) << j;
        return v;
    };
    std::set<Pattern> phi;
    const Pattern total = Pattern(1) << W.size();
    for (Pattern a = 0; a < total; ++a) {
        Pattern center = read(a, center_idx);
        bool wins = true;
        for (const auto& idx : nbr_idx)
            if (center <= read(a, idx)) {
                wins = false;
                break;
            }
        if (wins) phi.insert(a);
    }
    return ClopenSet{std::move(W), std::move(phi)};
}

std::pair<std::vector<int>, DensityEstimate> multiround_greedy(const GraphInstance& G,
                                                               int rounds, std::uint64_t seed) {
    if (rounds < 1) throw Error(ErrorCode::invalid_argument, "multiround_greedy: rounds >= 1");
    auto adj = G.adjacency();
    std::vector<bool> alive(G.vertex_count, true);
    std::vector<int> selected;
    std::vector<std::uint64_t> label(G.vertex_count);
    for (int round = 0; round < rounds; ++round) {
        auto rng = stream_rng(seed, (std::uint64_t)round);
        for (int v = 0; v < G.vertex_count; ++v) label[v] = rng();
        std::vector<int> winners;
        for (int v = 0; v < G.vertex_count; ++v) {
            if (!alive[v]) continue;
            bool is_min = true;
            for (int w : adj[v])
                if (alive[w] && label[w] <= label[v]) {
                    is_min = false;
                    break;
                }
            if (is_min) winners.push_back(v);
        }
        for (int v : winners) {
            selected.push_back(v);
            alive[v] = false;
            for (int w : adj[v]) alive[w] = false;
        }
    }
    std::sort(selected.begin(), selected.end());
    for (std::size_t i = 0; i + 1 < selected.size(); ++i)
        for (int w : adj[selected[i]])
            if (std::binary_search(selected.begin(), selected.end(), w))
                throw Error(ErrorCode::inconsistent, "multiround_greedy: output not independent");
    DensityEstimate est;
    est.mean = G.vertex_count ? (double)selected.size() / G.vertex_count : 0.0;
    est.std_error = 0.0;
    est.samples = 1;
    est.seed = seed;
    est.rule_id = "multiround:" + std::to_string(rounds);
    return {std::move(selected), est};
}

DensityEstimate estimate_density(const ClopenSet& I, long samples, std::uint64_t seed) {
    if (samples < 1) throw Error(ErrorCode::invalid_argument, "estimate_density: samples >= 1");
    auto rng = stream_rng(seed, 0);
    const Pattern mask =
        I.window.size() >= 64 ? ~Pattern(0) : ((Pattern(1) << I.window.size()) - 1);
    long hits = 0;
    for (long s = 0; s < samples; ++s)
        if (I.member(rng() & mask)) ++hits;
    DensityEstimate est;
    est.mean = (double)hits / (double)samples;
    est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / (double)samples);
    est.samples = samples;
    est.seed = seed;
    return est;
}

double rv_reference(int d) {
    if (d < 3) throw Error(ErrorCode::invalid_argument, "rv_reference: d >= 3");
    return std::log((double)d) / (double)d;
}

} // namespace frc

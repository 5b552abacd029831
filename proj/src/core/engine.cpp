#include "engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace frc {

GraphInstance auxiliary_graph(const SchreierInstance& S, const Window& D) {
    require_same_ctx(S.ctx, D.ctx, "auxiliary_graph");
    Window W = window_product(D, D, /*invert_right=*/true);
    std::set<std::pair<int, int>> edges;
    for (const auto& w : W.elems) {
        if (w.is_identity()) continue;
        for (int v = 0; v < S.vertex_count; ++v) {
            int u = S.eval(w, v);
            if (u >= 0 && u != v) edges.emplace(std::min(u, v), std::max(u, v));
        }
    }
    return GraphInstance::of(S.vertex_count, {edges.begin(), edges.end()});
}

AuxColoring greedy_coloring(const GraphInstance& G, const std::vector<int>& order, int palette) {
    if ((int)order.size() != G.vertex_count)
        throw Error(ErrorCode::invalid_argument, "greedy_coloring: order must be a permutation");
    std::vector<bool> seen(G.vertex_count, false);
    for (int v : order) {
        if (v < 0 || v >= G.vertex_count || seen[v])
            throw Error(ErrorCode::invalid_argument, "greedy_coloring: order must be a permutation");
        seen[v] = true;
    }
    auto adj = G.adjacency();
    AuxColoring out;
    out.color.assign(G.vertex_count, -1);
    for (int v : order) {
        std::vector<bool> taken(adj[v].size() + 1, false);
        for (int w : adj[v]) {
            int c = out.color[w];
            if (c >= 0 && c < (int)taken.size()) taken[c] = true;
        }
        int c = 0;
        while (taken[c]) ++c;
        out.color[v] = c;
        out.colors_used = std::max(out.colors_used, c + 1);
    }
    out.palette = std::max(palette, out.colors_used);
    return out;
}

namespace {

std::vector<int> identity_order(int n) {
    std::vector<int> o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

} // namespace

KFoldColoring synthesize(const SchreierInstance& S, const ClopenSet& rule, const Window& F,
                         const SynthOptions& opts) {
    require_same_ctx(S.ctx, rule.window.ctx, "synthesize");
    require_same_ctx(S.ctx, F.ctx, "synthesize");
    if (F.empty() && !opts.allow_empty_f)
        throw Error(ErrorCode::precondition, "synthesize: empty F requires an explicit opt-in");
    if (!F.empty()) {
        auto ind = is_independent(rule, F, opts.bit_cap);
        if (!ind.independent)
            throw Error(ErrorCode::precondition,
                        "synthesize: rule is not independent w.r.t. F (witness translate " +
                            element_to_string(ind.witness->sigma) + ")");
    }
    const Window& D = rule.window;
    Window ddinv = window_product(D, D, /*invert_right=*/true);

    // Buffer window: everything verify needs to read around a domain vertex.
    Window buffer = D;
    for (const auto& sigma : F.elems) {
        buffer = window_union(buffer, translate(D, sigma));
        buffer = window_union(buffer, translate(D, inverse(sigma)));
    }
    std::vector<int> domain;
    std::vector<std::vector<int>> window_images; // per domain vertex, eval of D
    for (int x = 0; x < S.vertex_count; ++x) {
        bool ok = true;
        for (const auto& g : buffer.elems)
            if (S.eval(g, x) < 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        domain.push_back(x);
    }

    GraphInstance H = auxiliary_graph(S, D);
    AuxColoring f = greedy_coloring(H, identity_order(S.vertex_count), (int)ddinv.size());
    int palette = opts.compact_colors ? f.colors_used : (int)ddinv.size();
    if (palette < (int)D.size() && !rule.patterns.empty())
        throw Error(ErrorCode::inconsistent, "synthesize: palette smaller than window");
    if (palette > opts.n_cap)
        throw Error(ErrorCode::cap_exceeded,
                    "synthesize: N = " + std::to_string(palette) + " exceeds cap " +
                        std::to_string(opts.n_cap) + "; consider minimize-window");

    KFoldColoring K;
    K.vertex_count = S.vertex_count;
    K.palette = palette;
    K.ell = std::uint64_t(1) << palette;
    K.domain = domain;
    if (K.ell * (std::uint64_t)S.vertex_count > opts.memory_bits_cap)
        throw Error(ErrorCode::cap_exceeded, "synthesize: coloring would exceed the memory cap");

    // f must be injective on every domain window orbit D.x.
    std::vector<std::vector<int>> colors_at(domain.size());
    for (std::size_t xi = 0; xi < domain.size(); ++xi) {
        std::vector<int> cs;
        cs.reserve(D.size());
        for (const auto& g : D.elems) cs.push_back(f.color[S.eval(g, domain[xi])]);
        std::vector<int> sorted = cs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::inconsistent,
                        "synthesize: auxiliary coloring not injective on a window orbit "
                        "(vertex " + std::to_string(domain[xi]) + ")");
        colors_at[xi] = std::move(cs);
    }

    K.fold = BigInt(rule.patterns.size()) * pow2((unsigned)(palette - (int)D.size()));
    if (K.fold != 0) K.ratio = Rational(pow2((unsigned)palette), K.fold);

    const std::size_t blocks = ((std::size_t)S.vertex_count + 63) / 64;
    K.sets.assign(K.ell, std::vector<std::uint64_t>(blocks, 0));
    // For each domain vertex, enumerate exactly the phi maps that select it:
    // a pattern q in Phi pins phi on the orbit colors, the rest is free.
    for (std::size_t xi = 0; xi < domain.size(); ++xi) {
        const auto& cs = colors_at[xi];
        std::vector<int> free_colors;
        std::vector<bool> pinned(palette, false);
        for (int c : cs) pinned[c] = true;
        for (int c = 0; c < palette; ++c)
            if (!pinned[c]) free_colors.push_back(c);
        const std::uint64_t nfree = std::uint64_t(1) << free_colors.size();
        const int x = domain[xi];
        for (Pattern q : rule.patterns) {
            std::uint64_t base = 0;
            for (std::size_t j = 0; j < cs.size(); ++j)
                base |= ((q >> j) & 1u) << cs[j];
            for (std::uint64_t fbits = 0; fbits < nfree; ++fbits) {
                std::uint64_t phi = base;
                for (std::size_t j = 0; j < free_colors.size(); ++j)
                    phi |= ((fbits >> j) & 1u) << free_colors[j];
                K.sets[phi][(std::size_t)x / 64] |= std::uint64_t(1) << (x % 64);
            }
        }
    }

    // Short cycles can make window translates wrap onto each other; flag it.
    if (!F.empty()) {
        int max_norm = 0;
        for (const auto& g : window_union(buffer, ddinv).elems)
            max_norm = std::max(max_norm, word_norm(g));
        auto g = girth(schreier_graph(S, F));
        K.wrap_around_risk = g.has_value() && *g <= 2 * max_norm;
    }
    return K;
}

VerifyReport verify(const KFoldColoring& K, const GraphInstance& G) {
    VerifyReport rep;
    if (G.vertex_count != K.vertex_count) {
        rep.counterexample = "vertex count mismatch";
        return rep;
    }
    std::vector<bool> in_domain(K.vertex_count, false);
    for (int v : K.domain) in_domain[v] = true;
    std::vector<BigInt> coverage(K.vertex_count, 0);
    for (const auto& set : K.sets)
        for (int v = 0; v < K.vertex_count; ++v)
            if ((set[(std::size_t)v / 64] >> (v % 64)) & 1u) ++coverage[v];
    rep.coverage_ok = true;
    for (int v = 0; v < K.vertex_count && rep.coverage_ok; ++v) {
        BigInt expect = in_domain[v] ? K.fold : BigInt(0);
        if (coverage[v] != expect) {
            rep.coverage_ok = false;
            rep.counterexample = "vertex " + std::to_string(v) + " covered " +
                                 coverage[v].str() + " times, expected " + expect.str();
        }
    }
    rep.independence_ok = true;
    for (std::uint64_t phi = 0; phi < K.ell && rep.independence_ok; ++phi) {
        for (auto [u, v] : G.edges) {
            if (K.in_set(phi, u) && K.in_set(phi, v)) {
                rep.independence_ok = false;
                rep.counterexample = "set " + std::to_string(phi) + " contains edge {" +
                                     std::to_string(u) + "," + std::to_string(v) + "}";
                break;
            }
        }
    }
    rep.pass = rep.coverage_ok && rep.independence_ok;
    return rep;
}

AverageDensity average_density_bound(const KFoldColoring& K, const WeightedMeasure& mu) {
    if ((int)mu.weight.size() != K.vertex_count)
        throw Error(ErrorCode::invalid_argument, "average_density_bound: measure size mismatch");
    // Common-denominator integer weights keep the per-set accumulation exact
    // without per-bit rational arithmetic.
    BigInt denom = 1;
    for (const auto& w : mu.weight) denom = lcm(denom, denominator(w));
    std::vector<BigInt> numer(K.vertex_count);
    for (int v = 0; v < K.vertex_count; ++v)
        numer[v] = numerator(mu.weight[v]) * (denom / denominator(mu.weight[v]));

    AverageDensity out;
    BigInt total = 0, best = -1;
    for (std::uint64_t phi = 0; phi < K.ell; ++phi) {
        BigInt mass = 0;
        for (int v = 0; v < K.vertex_count; ++v)
            if (K.in_set(phi, v)) mass += numer[v];
        total += mass;
        if (mass > best) {
            best = mass;
            out.argmax_phi = phi;
        }
    }
    out.average = Rational(total, denom * BigInt(K.ell));
    out.max_mass = Rational(best, denom);
    if (out.max_mass < out.average)
        throw Error(ErrorCode::inconsistent, "average_density_bound: max below average");
    return out;
}

} // namespace frc

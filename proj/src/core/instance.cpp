#include "instance.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <set>

#include "error.hpp"

namespace frc {

std::vector<std::vector<int>> GraphInstance::adjacency() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> GraphInstance::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

int GraphInstance::max_degree() const {
    int d = 0;
    for (int x : degrees()) d = std::max(d, x);
    return d;
}

int GraphInstance::regular_degree() const {
    auto deg = degrees();
    if (deg.empty()) return 0;
    for (int x : deg)
        if (x != deg[0]) return -1;
    return deg[0];
}

bool GraphInstance::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

GraphInstance GraphInstance::of(int vertex_count, std::vector<std::pair<int, int>> edges,
                                bool multigraph) {
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
        if (u == v && !multigraph)
            throw Error(ErrorCode::invalid_argument, "loop in a simple graph");
    }
    std::sort(edges.begin(), edges.end());
    if (!multigraph && std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorCode::invalid_argument, "parallel edge in a simple graph");
    return GraphInstance{vertex_count, std::move(edges), multigraph};
}

GraphInstance cycle_graph(int n) {
    if (n < 3) throw Error(ErrorCode::invalid_argument, "cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return GraphInstance::of(n, std::move(e));
}

GraphInstance complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return GraphInstance::of(n, std::move(e));
}

GraphInstance petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);         // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);               // spokes
    }
    return GraphInstance::of(10, std::move(e));
}

int SchreierInstance::step(int signed_gen, int v) const {
    if (v < 0) return -1;
    int i = std::abs(signed_gen) - 1;
    return signed_gen > 0 ? gen_maps[i][v] : inv_maps[i][v];
}

int SchreierInstance::eval(const GroupElement& g, int v) const {
    require_same_ctx(ctx, g.ctx, "SchreierInstance::eval");
    if (ctx.kind == GroupKind::free_group) {
        // Rightmost letter acts first: eval(a*b, x) = eval(a, eval(b, x)).
        for (auto it = g.rep.rbegin(); it != g.rep.rend() && v >= 0; ++it) v = step(*it, v);
        return v;
    }
    for (int j = 0; j < ctx.rank && v >= 0; ++j)
        for (int c = 0; c < g.rep[j] && v >= 0; ++c) v = step(j + 1, v);
    return v;
}

SchreierInstance SchreierInstance::of(GroupCtx ctx, int vertex_count,
                                      std::vector<std::vector<int>> gen_maps) {
    if ((int)gen_maps.size() != ctx.rank)
        throw Error(ErrorCode::invalid_argument, "one gen-map per generator required");
    SchreierInstance S;
    S.ctx = ctx;
    S.vertex_count = vertex_count;
    S.gen_maps = std::move(gen_maps);
    S.inv_maps.assign(S.gen_maps.size(), std::vector<int>(vertex_count, -1));
    for (std::size_t i = 0; i < S.gen_maps.size(); ++i) {
        if ((int)S.gen_maps[i].size() != vertex_count)
            throw Error(ErrorCode::invalid_argument, "gen-map has wrong length");
        for (int v = 0; v < vertex_count; ++v) {
            int w = S.gen_maps[i][v];
            if (w < -1 || w >= vertex_count)
                throw Error(ErrorCode::invalid_argument, "gen-map target out of range");
            if (w >= 0) {
                if (S.inv_maps[i][w] != -1)
                    throw Error(ErrorCode::invalid_argument, "gen-map is not injective");
                S.inv_maps[i][w] = v;
            }
        }
    }
    return S;
}

SchreierInstance torus_instance(int d, int m) {
    GroupCtx ctx = GroupCtx::torus_of(d, m);
    long long total = 1;
    for (int j = 0; j < d; ++j) {
        total *= m;
        if (total > std::numeric_limits<int>::max())
            throw Error(ErrorCode::cap_exceeded, "torus instance too large");
    }
    int n = (int)total;
    std::vector<std::vector<int>> maps(d, std::vector<int>(n));
    long long stride = 1;
    for (int j = 0; j < d; ++j) {
        for (int v = 0; v < n; ++v) {
            int coord = (int)((v / stride) % m);
            maps[j][v] = (int)(v - coord * stride + ((coord + 1) % m) * stride);
        }
        stride *= m;
    }
    auto S = SchreierInstance::of(ctx, n, std::move(maps));
    S.provenance = "torus:" + std::to_string(d) + ":" + std::to_string(m);
    return S;
}

bool is_free_up_to_radius(const SchreierInstance& S, int radius) {
    // Walks formal reduced generator words, not reduced group elements, so
    // wrap-arounds like sigma^m = 1 on a small torus are caught.
    GroupCtx walker = GroupCtx::free_of_rank(S.ctx.rank);
    for (const auto& word : ball(walker, radius).elems) {
        if (word.is_identity()) continue;
        for (int v = 0; v < S.vertex_count; ++v) {
            int w = v;
            for (auto it = word.rep.rbegin(); it != word.rep.rend() && w >= 0; ++it)
                w = S.step(*it, w);
            if (w == v) return false;
        }
    }
    return true;
}

GraphInstance random_regular(int n_gens, int vertices, std::uint64_t seed, int max_attempts) {
    if (n_gens < 1 || vertices < 1)
        throw Error(ErrorCode::invalid_argument, "random_regular: bad parameters");
    const int d = 2 * n_gens;
    if (vertices <= d)
        throw Error(ErrorCode::invalid_argument, "random_regular: need more vertices than degree");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs((std::size_t)vertices * d);
    for (int v = 0; v < vertices; ++v)
        for (int j = 0; j < d; ++j) stubs[(std::size_t)v * d + j] = v;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = rng() % (i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.emplace(u, v).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
        return GraphInstance::of(vertices, std::move(edges));
    }
    throw Error(ErrorCode::budget_exhausted, "random_regular: rejection budget exhausted");
}

GraphInstance schreier_graph(const SchreierInstance& S, const Window& F) {
    require_same_ctx(S.ctx, F.ctx, "schreier_graph");
    if (F.contains(identity(F.ctx)))
        throw Error(ErrorCode::precondition, "schreier_graph: identity element in F");
    std::set<std::pair<int, int>> edges;
    for (const auto& g : F.elems) {
        for (int v = 0; v < S.vertex_count; ++v) {
            int w = S.eval(g, v);
            if (w >= 0 && w != v) edges.emplace(std::min(v, w), std::max(v, w));
        }
    }
    return GraphInstance::of(S.vertex_count, {edges.begin(), edges.end()});
}

std::optional<int> girth(const GraphInstance& G) {
    int best = std::numeric_limits<int>::max();
    if (G.multigraph) {
        auto sorted = G.edges;
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) best = 2;
        for (auto [u, v] : G.edges)
            if (u == v) best = 1;
    }
    // Adjacency with edge ids so a BFS never walks the arriving edge back.
    std::vector<std::vector<std::pair<int, int>>> adj(G.vertex_count);
    for (int e = 0; e < (int)G.edges.size(); ++e) {
        auto [u, v] = G.edges[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<int> dist(G.vertex_count), via(G.vertex_count);
    for (int s = 0; s < G.vertex_count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        via[s] = -1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (auto [w, e] : adj[u]) {
                if (e == via[u]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    q.push(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace frc

#include "decoration.hpp"

#include <algorithm>
#include <queue>

#include "error.hpp"

namespace frc {

Rational Decoration::certified_fraction() const {
    if (graph.vertex_count == 0) return Rational(1);
    return Rational(BigInt(certified.size()), BigInt(graph.vertex_count));
}

std::vector<int> recompute_certified(const GraphInstance& G,
                                     const std::vector<std::vector<int>>& gen_maps) {
    const int n = (int)gen_maps.size();
    std::vector<std::vector<int>> inv(n, std::vector<int>(G.vertex_count, -1));
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < G.vertex_count; ++v)
            if (gen_maps[i][v] >= 0) inv[i][gen_maps[i][v]] = v;
    auto adj = G.adjacency();
    std::vector<int> out;
    for (int x = 0; x < G.vertex_count; ++x) {
        std::vector<int> claimed;
        bool all_defined = true;
        for (int i = 0; i < n && all_defined; ++i) {
            if (gen_maps[i][x] < 0 || inv[i][x] < 0) {
                all_defined = false;
                break;
            }
            claimed.push_back(gen_maps[i][x]);
            claimed.push_back(inv[i][x]);
        }
        if (!all_defined) continue;
        std::sort(claimed.begin(), claimed.end());
        claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
        std::vector<int> nbrs = adj[x];
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (claimed == nbrs) out.push_back(x);
    }
    return out;
}

void validate_decoration(const Decoration& D) {
    const auto& G = D.graph;
    for (const auto& p : D.gen_maps) {
        if ((int)p.size() != G.vertex_count)
            throw Error(ErrorCode::invalid_argument, "gen-map has wrong length");
        std::vector<bool> hit(G.vertex_count, false);
        for (int v = 0; v < G.vertex_count; ++v) {
            int w = p[v];
            if (w < -1 || w >= G.vertex_count)
                throw Error(ErrorCode::invalid_argument, "gen-map target out of range");
            if (w < 0) continue;
            if (hit[w]) throw Error(ErrorCode::invalid_argument, "gen-map is not injective");
            hit[w] = true;
            if (!G.has_edge(v, w))
                throw Error(ErrorCode::invalid_argument, "gen-map follows a non-edge");
        }
    }
    if (recompute_certified(G, D.gen_maps) != D.certified)
        throw Error(ErrorCode::inconsistent, "certified set disagrees with recomputation");
}

namespace {

struct Arc {
    int from, to;
};

// Eulerian traversal per component; every edge oriented in its traversal
// direction, so in-degree equals out-degree at each vertex.
std::vector<Arc> eulerian_orientation(const GraphInstance& G) {
    std::vector<std::vector<std::pair<int, int>>> adj(G.vertex_count);
    for (int e = 0; e < (int)G.edges.size(); ++e) {
        auto [u, v] = G.edges[e];
        adj[u].emplace_back(v, e);
        if (u != v) adj[v].emplace_back(u, e);
    }
    std::vector<bool> used(G.edges.size(), false);
    std::vector<std::size_t> next(G.vertex_count, 0);
    std::vector<Arc> arcs(G.edges.size());
    std::vector<int> stack;
    for (int s = 0; s < G.vertex_count; ++s) {
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            while (next[v] < adj[v].size() && used[adj[v][next[v]].second]) ++next[v];
            if (next[v] == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            auto [w, e] = adj[v][next[v]];
            used[e] = true;
            arcs[e] = Arc{v, w};
            stack.push_back(w);
        }
    }
    return arcs;
}

// Kuhn's augmenting-path matching on a bipartite multigraph given as
// out-arc lists per left vertex; arcs carry the original edge id.
bool try_augment(int u, const std::vector<std::vector<std::pair<int, int>>>& out,
                 std::vector<int>& match_left, std::vector<int>& match_right,
                 std::vector<int>& match_edge, std::vector<bool>& visited) {
    for (auto [v, e] : out[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_right[v] < 0 ||
            try_augment(match_right[v], out, match_left, match_right, match_edge, visited)) {
            match_left[u] = v;
            match_right[v] = u;
            match_edge[u] = e;
            return true;
        }
    }
    return false;
}

} // namespace

Decoration full_decoration(const GraphInstance& G) {
    int deg = G.regular_degree();
    if (deg < 0 || deg % 2 != 0)
        throw Error(ErrorCode::precondition, "full_decoration: graph is not regular of even degree");
    const int n = deg / 2;
    std::vector<Arc> arcs = eulerian_orientation(G);
    std::vector<bool> removed(arcs.size(), false);
    Decoration D;
    D.graph = G;
    D.gen_maps.assign(n, std::vector<int>(G.vertex_count, -1));
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::pair<int, int>>> out(G.vertex_count);
        for (int e = 0; e < (int)arcs.size(); ++e)
            if (!removed[e]) out[arcs[e].from].emplace_back(arcs[e].to, e);
        std::vector<int> match_left(G.vertex_count, -1), match_right(G.vertex_count, -1);
        std::vector<int> match_edge(G.vertex_count, -1);
        std::vector<bool> visited(G.vertex_count);
        for (int u = 0; u < G.vertex_count; ++u) {
            std::fill(visited.begin(), visited.end(), false);
            if (!try_augment(u, out, match_left, match_right, match_edge, visited))
                throw Error(ErrorCode::inconsistent,
                            "full_decoration: perfect matching extraction failed");
        }
        for (int u = 0; u < G.vertex_count; ++u) {
            D.gen_maps[i][u] = match_left[u];
            removed[match_edge[u]] = true;
        }
    }
    D.certified = recompute_certified(G, D.gen_maps);
    return D;
}

Decoration partial_decoration(const GraphInstance& G, int n_gens) {
    if (n_gens < 1) throw Error(ErrorCode::invalid_argument, "partial_decoration: n_gens >= 1");
    if (G.max_degree() > 2 * n_gens)
        throw Error(ErrorCode::precondition, "partial_decoration: max degree exceeds 2n");
    if (G.regular_degree() == 2 * n_gens) return full_decoration(G);
    Decoration D;
    D.graph = G;
    D.gen_maps.assign(n_gens, std::vector<int>(G.vertex_count, -1));
    std::vector<bool> used(G.edges.size(), false);
    for (int i = 0; i < n_gens; ++i) {
        std::vector<bool> has_out(G.vertex_count, false), has_in(G.vertex_count, false);
        for (int e = 0; e < (int)G.edges.size(); ++e) {
            if (used[e]) continue;
            auto [u, v] = G.edges[e];
            if (!has_out[u] && !has_in[v]) {
                D.gen_maps[i][u] = v;
                has_out[u] = has_in[v] = true;
                used[e] = true;
            } else if (!has_out[v] && !has_in[u]) {
                D.gen_maps[i][v] = u;
                has_out[v] = has_in[u] = true;
                used[e] = true;
            }
        }
    }
    D.certified = recompute_certified(G, D.gen_maps);
    return D;
}

std::vector<int> certified_ball_set(const Decoration& D, int k) {
    if (k < 0) throw Error(ErrorCode::invalid_argument, "certified_ball_set: k >= 0");
    const int V = D.graph.vertex_count;
    std::vector<bool> in_c(V, false);
    for (int v : D.certified) in_c[v] = true;
    // Multi-source BFS from the uncertified vertices; exclude distance <= k.
    std::vector<int> dist(V, -1);
    std::queue<int> q;
    for (int v = 0; v < V; ++v)
        if (!in_c[v]) {
            dist[v] = 0;
            q.push(v);
        }
    auto adj = D.graph.adjacency();
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] == k) continue;
        for (int w : adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    std::vector<int> out;
    for (int v = 0; v < V; ++v)
        if (dist[v] == -1) out.push_back(v);
    return out;
}

void WeightedMeasure::validate() const {
    Rational total = 0;
    for (const auto& w : weight) {
        if (w < 0) throw Error(ErrorCode::invalid_argument, "measure weight is negative");
        total += w;
    }
    if (total != 1) throw Error(ErrorCode::invalid_argument, "measure mass is not 1");
}

WeightedMeasure uniform_measure(int n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "uniform_measure: n >= 1");
    return WeightedMeasure{std::vector<Rational>(n, Rational(1, n))};
}

namespace {

std::vector<std::vector<int>> radius_balls(const GraphInstance& G, int k) {
    auto adj = G.adjacency();
    std::vector<std::vector<int>> balls(G.vertex_count);
    std::vector<int> dist(G.vertex_count);
    for (int s = 0; s < G.vertex_count; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        balls[s].push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (dist[u] == k) continue;
            for (int w : adj[u])
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                    balls[s].push_back(w);
                }
        }
    }
    return balls;
}

} // namespace

WeightedMeasure mu_k(const WeightedMeasure& mu, const GraphInstance& G, int k) {
    if (k < 0) throw Error(ErrorCode::invalid_argument, "mu_k: k >= 0");
    if ((int)mu.weight.size() != G.vertex_count)
        throw Error(ErrorCode::invalid_argument, "mu_k: measure size mismatch");
    auto balls = radius_balls(G, k);
    const std::size_t ball_size = balls.empty() ? 1 : balls[0].size();
    for (const auto& b : balls)
        if (b.size() != ball_size)
            throw Error(ErrorCode::precondition, "mu_k: radius-k ball sizes are not uniform");
    WeightedMeasure out{std::vector<Rational>(G.vertex_count, Rational(0))};
    const Rational inv(1, (long)ball_size);
    for (int x = 0; x < G.vertex_count; ++x)
        for (int v : balls[x]) out.weight[v] += mu.weight[x] * inv;
    return out;
}

CkMassReport ck_mass_bound_check(const Decoration& D, const WeightedMeasure& mu, int k,
                                 const Rational& eps) {
    WeightedMeasure mk = mu_k(mu, D.graph, k);
    CkMassReport rep;
    rep.ball_size = (int)radius_balls(D.graph, k)[0].size();
    for (int v : D.certified) rep.mu_k_certified += mk.weight[v];
    for (int v : certified_ball_set(D, k)) rep.mu_ck += mu.weight[v];
    const Rational inv_d(1, rep.ball_size);
    rep.hypothesis = rep.mu_k_certified >= Rational(1) - eps * inv_d;
    rep.conclusion = rep.mu_ck >= Rational(1) - eps;
    rep.implication_holds = !rep.hypothesis || rep.conclusion;
    rep.averaging_chain_holds =
        rep.mu_k_certified <= rep.mu_ck * inv_d + Rational(1) - inv_d;
    return rep;
}

SchreierInstance to_instance(const Decoration& D) {
    auto S = SchreierInstance::of(GroupCtx::free_of_rank(D.n_gens()), D.graph.vertex_count,
                                  D.gen_maps);
    S.provenance = "decoration";
    return S;
}

} // namespace frc

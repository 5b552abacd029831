#include "lp.hpp"

#include <algorithm>
#include <cstdint>

#include "error.hpp"

namespace frc {

namespace {

void check_cap(const GraphInstance& G, int cap, const char* where) {
    if (G.vertex_count > cap)
        throw Error(ErrorCode::cap_exceeded,
                    std::string(where) + ": vertex count " + std::to_string(G.vertex_count) +
                        " exceeds cap " + std::to_string(cap));
}

using Mask = std::uint64_t;

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the complement are exactly the maximal independent sets.
void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& nbr,
                   std::vector<Mask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    Mask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (Mask t = px; t; t &= t - 1) {
        int u = std::countr_zero(t);
        int cnt = std::popcount(p & nbr[u]);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    for (Mask cand = p & ~nbr[pivot]; cand; cand &= cand - 1) {
        int v = std::countr_zero(cand);
        Mask bit = Mask(1) << v;
        bron_kerbosch(r | bit, p & nbr[v], x & nbr[v], nbr, out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<Mask> maximal_independent_masks(const GraphInstance& G) {
    std::vector<Mask> comp(G.vertex_count, 0);
    for (int u = 0; u < G.vertex_count; ++u)
        for (int v = 0; v < G.vertex_count; ++v)
            if (u != v && !G.has_edge(u, v)) comp[u] |= Mask(1) << v;
    std::vector<Mask> out;
    Mask all = G.vertex_count == 64 ? ~Mask(0) : ((Mask(1) << G.vertex_count) - 1);
    bron_kerbosch(0, all, 0, comp, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> mask_to_set(Mask m) {
    std::vector<int> s;
    for (Mask t = m; t; t &= t - 1) s.push_back(std::countr_zero(t));
    return s;
}

BigInt ceil_rational(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

} // namespace

std::vector<std::vector<int>> max_independent_sets(const GraphInstance& G, int vertex_cap) {
    check_cap(G, vertex_cap, "max_independent_sets");
    std::vector<std::vector<int>> out;
    for (Mask m : maximal_independent_masks(G)) out.push_back(mask_to_set(m));
    std::sort(out.begin(), out.end());
    return out;
}

LPResult fractional_chromatic(const GraphInstance& G, int vertex_cap) {
    check_cap(G, vertex_cap, "fractional_chromatic");
    auto sets = max_independent_sets(G, vertex_cap);
    const int n = G.vertex_count;  // packing variables y_v
    const int m = (int)sets.size(); // one <= 1 constraint per maximal ind. set
    if (n == 0) return LPResult{Rational(0), {}, Rational(0), true};

    // Tableau for: maximize sum y_v s.t. for each set S, sum_{v in S} y_v <= 1.
    const int cols = n + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1, Rational(0)));
    std::vector<Rational> zrow(cols, Rational(0));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int v : sets[i]) T[i][v] = 1;
        T[i][n + i] = 1;
        T[i][cols] = 1;
        basis[i] = n + i;
    }
    for (int v = 0; v < n; ++v) zrow[v] = 1;
    Rational zval(0);

    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) // Bland: first improving column
            if (zrow[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols] / T[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0)
            throw Error(ErrorCode::inconsistent, "fractional_chromatic: unbounded LP");
        Rational piv = T[leave][enter];
        for (auto& t : T[leave]) t /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational factor = T[i][enter];
            for (int j = 0; j <= cols; ++j) T[i][j] -= factor * T[leave][j];
        }
        Rational zfac = zrow[enter];
        zval += zfac * T[leave][cols];
        for (int j = 0; j < cols; ++j) zrow[j] -= zfac * T[leave][j];
        basis[leave] = enter;
    }

    LPResult res;
    res.value = zval;
    // Covering weights are the duals: negated reduced costs of the slacks.
    Rational sum(0);
    std::vector<Rational> w(m);
    for (int i = 0; i < m; ++i) {
        w[i] = -zrow[n + i];
        if (w[i] < 0) throw Error(ErrorCode::inconsistent, "fractional_chromatic: negative dual");
        if (w[i] > 0) res.support.emplace_back(sets[i], w[i]);
        sum += w[i];
    }
    // Certificate: dual feasibility for the covering LP and zero gap.
    std::vector<Rational> covered(n, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int v : sets[i]) covered[v] += w[i];
    for (int v = 0; v < n; ++v)
        if (covered[v] < 1)
            throw Error(ErrorCode::inconsistent, "fractional_chromatic: covering infeasible");
    res.dual_value = sum;
    res.dual_certified = (sum == res.value);
    if (!res.dual_certified)
        throw Error(ErrorCode::inconsistent, "fractional_chromatic: duality gap");
    return res;
}

namespace {

bool kfold_feasible(int ell, std::vector<int>& demand, const std::vector<Mask>& sets,
                    std::vector<Mask>& chosen) {
    int vmax = -1, dmax = 0;
    for (int v = 0; v < (int)demand.size(); ++v)
        if (demand[v] > dmax) {
            dmax = demand[v];
            vmax = v;
        }
    if (vmax < 0) return true;
    if (dmax > ell) return false;
    for (Mask s : sets) {
        if (!((s >> vmax) & 1)) continue;
        for (Mask t = s; t; t &= t - 1) --demand[std::countr_zero(t)];
        chosen.push_back(s);
        if (kfold_feasible(ell - 1, demand, sets, chosen)) return true;
        chosen.pop_back();
        for (Mask t = s; t; t &= t - 1) ++demand[std::countr_zero(t)];
    }
    return false;
}

} // namespace

KFoldResult kfold_chromatic(const GraphInstance& G, int k, int vertex_cap) {
    check_cap(G, vertex_cap, "kfold_chromatic");
    if (k < 1) throw Error(ErrorCode::invalid_argument, "kfold_chromatic: k >= 1");
    if (G.vertex_count == 0) return KFoldResult{0, {}};
    auto masks = maximal_independent_masks(G);
    Rational chi_star = fractional_chromatic(G, vertex_cap).value;
    int ell = (int)ceil_rational(Rational(k) * chi_star);
    for (;; ++ell) {
        std::vector<int> demand(G.vertex_count, k);
        std::vector<Mask> chosen;
        if (kfold_feasible(ell, demand, masks, chosen)) {
            KFoldResult res;
            res.ell = ell;
            for (Mask s : chosen) res.witness.push_back(mask_to_set(s));
            // A feasible family may use fewer than ell sets; pad with repeats.
            while ((int)res.witness.size() < ell) res.witness.push_back(res.witness.back());
            return res;
        }
    }
}

AlphaResult independence_number(const GraphInstance& G, int vertex_cap) {
    check_cap(G, vertex_cap, "independence_number");
    AlphaResult res;
    for (Mask m : maximal_independent_masks(G)) {
        int c = std::popcount(m);
        if (c > res.value) {
            res.value = c;
            res.witness = mask_to_set(m);
        }
    }
    return res;
}

namespace {

bool extend_automorphism(const GraphInstance& G, const std::vector<int>& deg,
                         std::vector<int>& image, std::vector<bool>& used, int v) {
    if (v == G.vertex_count) return true;
    for (int t = 0; t < G.vertex_count; ++t) {
        if (used[t] || deg[t] != deg[v]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (G.has_edge(u, v) != G.has_edge(image[u], t)) ok = false;
        if (!ok) continue;
        image[v] = t;
        used[t] = true;
        if (extend_automorphism(G, deg, image, used, v + 1)) return true;
        used[t] = false;
    }
    image[v] = -1;
    return false;
}

} // namespace

bool is_vertex_transitive(const GraphInstance& G, int vertex_cap) {
    check_cap(G, vertex_cap, "is_vertex_transitive");
    if (G.vertex_count <= 1) return true;
    auto deg = G.degrees();
    for (int t = 1; t < G.vertex_count; ++t) {
        std::vector<int> image(G.vertex_count, -1);
        std::vector<bool> used(G.vertex_count, false);
        if (deg[t] != deg[0]) return false;
        image[0] = t;
        used[t] = true;
        if (!extend_automorphism(G, deg, image, used, 1)) return false;
    }
    return true;
}

} // namespace frc

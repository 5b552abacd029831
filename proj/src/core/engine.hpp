#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clopen.hpp"
#include "decoration.hpp"
#include "instance.hpp"
#include "rational.hpp"

namespace frc {

// Proper coloring of an auxiliary graph; palette is the pattern-window
// product size N even when greedy used fewer colors.
struct AuxColoring {
    std::vector<int> color;
    int colors_used = 0;
    int palette = 0;
};

// Ordered family of independent sets I_1..I_ell certifying a k-fold
// ell-coloring on the certified domain. Sets are bitsets over vertices.
struct KFoldColoring {
    int vertex_count = 0;
    int palette = 0;       // N
    std::uint64_t ell = 0; // 2^N
    BigInt fold;           // k
    Rational ratio;        // ell / k
    std::vector<int> domain; // sorted vertex list
    std::vector<std::vector<std::uint64_t>> sets;
    bool wrap_around_risk = false;

    bool in_set(std::uint64_t phi, int v) const {
        return (sets[phi][(std::size_t)v / 64] >> (v % 64)) & 1u;
    }
};

// H: distinct u, v adjacent when v = w.u for some w in DD^-1 (where the
// action is defined).
GraphInstance auxiliary_graph(const SchreierInstance& S, const Window& D);

// First-fit greedy in the given vertex order; uses at most max_degree+1
// colors.
AuxColoring greedy_coloring(const GraphInstance& G, const std::vector<int>& order, int palette);

struct SynthOptions {
    int n_cap = 22;
    int bit_cap = kDefaultBitCap;
    std::uint64_t memory_bits_cap = std::uint64_t(1) << 33;
    bool allow_empty_f = false;
    bool compact_colors = false; // palette = colors actually used
};

// The main construction: greedy-color H = G(X, DD^-1), enumerate all
// phi: N -> 2 and collect I_phi = {x : (gamma -> phi(f(gamma.x)))|D in Phi}.
// The domain is restricted to vertices where the whole buffer window
// D union D*sigma (sigma in F, symmetrized) is defined.
KFoldColoring synthesize(const SchreierInstance& S, const ClopenSet& rule, const Window& F,
                         const SynthOptions& opts = {});

struct VerifyReport {
    bool coverage_ok = false;
    bool independence_ok = false;
    bool pass = false;
    std::string counterexample; // empty when pass
};

// From-scratch recheck of exact coverage on the domain and independence of
// every set in the target graph.
VerifyReport verify(const KFoldColoring& K, const GraphInstance& G);

struct AverageDensity {
    Rational average;       // sum over phi of mu(I_phi), divided by 2^N
    std::uint64_t argmax_phi = 0;
    Rational max_mass;
};

AverageDensity average_density_bound(const KFoldColoring& K, const WeightedMeasure& mu);

} // namespace frc

#pragma once

#include <vector>

#include "instance.hpp"
#include "rational.hpp"

namespace frc {

inline constexpr int kDefaultLpVertexCap = 30;

// All maximal independent sets, sorted vertex lists in deterministic order.
std::vector<std::vector<int>> max_independent_sets(const GraphInstance& G,
                                                   int vertex_cap = kDefaultLpVertexCap);

struct LPResult {
    Rational value;
    // Covering-LP weights on maximal independent sets.
    std::vector<std::pair<std::vector<int>, Rational>> support;
    Rational dual_value; // fractional clique value; equals value at optimum
    bool dual_certified = false;
};

// Exact rational optimum of min sum w_S s.t. sum_{S contains v} w_S >= 1,
// solved through the packing dual with Bland's rule; zero duality gap is
// checked, not assumed.
LPResult fractional_chromatic(const GraphInstance& G, int vertex_cap = kDefaultLpVertexCap);

struct KFoldResult {
    int ell = 0;
    std::vector<std::vector<int>> witness; // ell independent sets
};

// Exact minimum ell admitting a k-fold ell-coloring, by branch and bound
// over multisets of maximal independent sets.
KFoldResult kfold_chromatic(const GraphInstance& G, int k, int vertex_cap = kDefaultLpVertexCap);

struct AlphaResult {
    int value = 0;
    std::vector<int> witness;
};

AlphaResult independence_number(const GraphInstance& G, int vertex_cap = kDefaultLpVertexCap);

// Orbit check by automorphism search; only sensible on tiny graphs.
bool is_vertex_transitive(const GraphInstance& G, int vertex_cap = 12);

} // namespace frc

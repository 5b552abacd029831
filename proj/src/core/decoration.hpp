#pragma once

#include <vector>

#include "instance.hpp"
#include "rational.hpp"

namespace frc {

// Per-generator partial injections p_1..p_n on the vertices of a base
// graph; every mapped pair (x, p_i(x)) is an edge. The certified set holds
// exactly the vertices whose full neighborhood is explained by the maps.
struct Decoration {
    GraphInstance graph;
    std::vector<std::vector<int>> gen_maps; // -1 = undefined
    std::vector<int> certified;             // sorted

    int n_gens() const { return (int)gen_maps.size(); }
    Rational certified_fraction() const;
};

std::vector<int> recompute_certified(const GraphInstance& G,
                                     const std::vector<std::vector<int>>& gen_maps);

// Throws when the maps are not injective, map along non-edges, or the
// certified set disagrees with a from-scratch recomputation.
void validate_decoration(const Decoration& D);

// 2n-regular (multi)graph -> n total permutations via Eulerian orientation
// and repeated perfect-matching extraction. Certified set is everything.
Decoration full_decoration(const GraphInstance& G);

// Greedy path/cycle cover per generator for graphs of max degree <= 2n;
// falls back to the exact route when the graph is 2n-regular.
Decoration partial_decoration(const GraphInstance& G, int n_gens);

// Vertices whose whole radius-k ball is certified.
std::vector<int> certified_ball_set(const Decoration& D, int k);

struct WeightedMeasure {
    std::vector<Rational> weight; // nonnegative, sums to 1

    void validate() const;
};

WeightedMeasure uniform_measure(int n);

// Ball-averaged reweighting; requires every radius-k ball to have the same
// size. Exact rationals, total mass preserved.
WeightedMeasure mu_k(const WeightedMeasure& mu, const GraphInstance& G, int k);

struct CkMassReport {
    int ball_size = 0;          // |D| = common radius-k ball size
    Rational mu_k_certified;    // mu_k(C(Q,p))
    Rational mu_ck;             // mu(C_k)
    bool hypothesis = false;    // mu_k(C) >= 1 - eps/|D|
    bool conclusion = false;    // mu(C_k) >= 1 - eps
    bool implication_holds = false;
    bool averaging_chain_holds = false; // mu_k(C) <= mu(C_k)/|D| + 1 - 1/|D|
};

CkMassReport ck_mass_bound_check(const Decoration& D, const WeightedMeasure& mu, int k,
                                 const Rational& eps);

// View the decoration as a free-group Schreier instance for the engine.
SchreierInstance to_instance(const Decoration& D);

} // namespace frc

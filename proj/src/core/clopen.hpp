#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "group.hpp"
#include "rational.hpp"

namespace frc {

using Pattern = std::uint64_t;

inline constexpr int kDefaultBitCap = 24;

// A clopen subset of the shift space 2^Gamma: a finite window D together
// with the admissible patterns Phi on it. Bit j of a pattern is the value
// at window.elems[j]. Membership of a point depends only on its window
// restriction, and the coin-flip measure is exactly |Phi| / 2^|D|.
struct ClopenSet {
    Window window;
    std::set<Pattern> patterns;

    bool member(Pattern p) const { return patterns.count(p) != 0; }
};

ClopenSet empty_clopen(const GroupCtx& ctx);

// Single-constraint cylinder {x : x(e) = bit for each pinned coordinate}.
ClopenSet cylinder(const Window& window, const std::vector<int>& bits);

Rational density(const ClopenSet& I);

// The set {x : sigma . x in I}, on window D*sigma with the same pattern
// bits carried along the right translation.
ClopenSet shift_pullback(const ClopenSet& I, const GroupElement& sigma);

// Re-express I on a superwindow W; pattern count multiplies by 2^(|W|-|D|).
ClopenSet extend_to_window(const ClopenSet& I, const Window& W, int bit_cap = kDefaultBitCap);

struct IndependenceWitness {
    GroupElement sigma;    // violating translate
    Window joint;          // D union D*sigma
    Pattern assignment;    // bits on the joint window realizing the violation
};

struct IndependenceResult {
    bool independent = false;
    std::optional<IndependenceWitness> witness;
};

// Exact symbolic check of I /\ (sigma . I) = empty for every sigma in F,
// by enumeration of all assignments on the joint window.
IndependenceResult is_independent(const ClopenSet& I, const Window& F,
                                  int bit_cap = kDefaultBitCap);

// C \ union over sigma in F of the sigma-translate of C. Always independent.
ClopenSet prune(const ClopenSet& C, const Window& F, int bit_cap = kDefaultBitCap);

struct DensityLossReport {
    Rational beta_j;
    Rational beta_sym_diff; // beta(J symmetric-difference C)
    Rational beta_pruned;   // beta(prune(C, F))
    Rational lower_bound;   // beta(J) - (|F|+1) * beta(J sym-diff C)
    bool holds = false;
};

// Checks beta(I) >= beta(J) - (|F|+1) beta(J sym-diff C) for I = prune(C, F).
// J must describe an independent set (caller-asserted).
DensityLossReport density_loss_check(const ClopenSet& J, const ClopenSet& C, const Window& F,
                                     int bit_cap = kDefaultBitCap);

// Drops window coordinates the membership function does not depend on.
ClopenSet minimize_window(const ClopenSet& I);

} // namespace frc

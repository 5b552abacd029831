#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clopen.hpp"
#include "instance.hpp"

namespace frc {

struct DensityEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::string rule_id;
    std::string instance_id;
    std::uint64_t seed = 0;
};

// Local hash-max rule: a point is selected when the bit pattern on the
// radius-r ball around it, read as an integer, strictly beats the pattern
// at every F (and F^-1) neighbor. Strictness makes the rule independent.
ClopenSet hashmax_rule(const GroupCtx& ctx, const Window& F, int radius,
                       int bit_cap = kDefaultBitCap);

// Iterated local-minimum selection with fresh i.i.d. labels per round.
std::pair<std::vector<int>, DensityEstimate> multiround_greedy(const GraphInstance& G,
                                                               int rounds, std::uint64_t seed);

// Monte Carlo membership frequency over uniform window bits.
DensityEstimate estimate_density(const ClopenSet& I, long samples, std::uint64_t seed);

// Leading-order reference log(d)/d; asymptotic only, never asserted against.
double rv_reference(int d);

} // namespace frc

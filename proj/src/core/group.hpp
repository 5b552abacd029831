#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace frc {

enum class GroupKind { free_group, torus };

// Either the free group F_n on n generators or the finite abelian group
// (Z_m)^d. These are the only two families the artifact supports.
struct GroupCtx {
    GroupKind kind = GroupKind::free_group;
    int rank = 1;    // free: generator count n; torus: dimension d
    int modulus = 0; // torus only, >= 2

    bool operator==(const GroupCtx&) const = default;

    static GroupCtx free_of_rank(int n);
    static GroupCtx torus_of(int d, int m);
    std::string describe() const;
};

// Canonical representation: reduced word of signed 1-based generator
// indices (free case) or a coordinate vector with entries in [0, m)
// (torus case). Equality of representations is equality of elements.
struct GroupElement {
    GroupCtx ctx;
    std::vector<int> rep;

    bool operator==(const GroupElement&) const = default;
    bool is_identity() const;
};

GroupElement identity(const GroupCtx& ctx);
GroupElement generator(const GroupCtx& ctx, int i); // i in [1, rank]

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
int word_norm(const GroupElement& a);

// Length-lexicographic on reduced words; lexicographic on torus vectors.
bool canonical_less(const GroupElement& a, const GroupElement& b);

std::string element_to_string(const GroupElement& a);

// Ordered duplicate-free element list; the order is the canonical one, so
// pattern bit indices derived from a window are stable across runs.
struct Window {
    GroupCtx ctx;
    std::vector<GroupElement> elems;

    static Window of(const GroupCtx& ctx, std::vector<GroupElement> elems);
    std::size_t size() const { return elems.size(); }
    bool empty() const { return elems.empty(); }
    // -1 when absent.
    int index_of(const GroupElement& e) const;
    bool contains(const GroupElement& e) const { return index_of(e) >= 0; }
    bool operator==(const Window&) const = default;
};

Window standard_generators(const GroupCtx& ctx);

// All elements of word norm <= radius w.r.t. the standard generators.
Window ball(const GroupCtx& ctx, int radius);

// {d * e^-1 : d in D, e in E} by default; {d * e} when invert_right is false.
Window window_product(const Window& D, const Window& E, bool invert_right = true);

// Right translate D * sigma.
Window translate(const Window& D, const GroupElement& sigma);

Window window_union(const Window& a, const Window& b);

void require_same_ctx(const GroupCtx& a, const GroupCtx& b, const char* where);

} // namespace frc

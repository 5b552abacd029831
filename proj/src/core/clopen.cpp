#include "clopen.hpp"

#include <algorithm>

namespace frc {

namespace {

void check_bits(const ClopenSet& I) {
    Pattern mask = I.window.size() >= 64 ? ~Pattern(0) : ((Pattern(1) << I.window.size()) - 1);
    for (Pattern p : I.patterns)
        if ((p & ~mask) != 0)
            throw Error(ErrorCode::invalid_argument, "pattern has bits outside the window");
}

void check_cap(std::size_t bits, int cap, const char* where) {
    if ((int)bits > cap)
        throw Error(ErrorCode::cap_exceeded,
                    std::string(where) + ": joint window needs " + std::to_string(bits) +
                        " bits, cap is " + std::to_string(cap));
}

void require_identity_free(const Window& F, const char* where) {
    if (F.contains(identity(F.ctx)))
        throw Error(ErrorCode::precondition, std::string(where) + ": identity element in F");
}

// Positions of the elements of D inside the superwindow W.
std::vector<int> embed(const Window& D, const Window& W) {
    std::vector<int> idx(D.size());
    for (std::size_t j = 0; j < D.size(); ++j) {
        idx[j] = W.index_of(D.elems[j]);
        if (idx[j] < 0) throw Error(ErrorCode::invalid_argument, "window is not a superwindow");
    }
    return idx;
}

// Positions in W of D*sigma, indexed like D (position j reads the value at
// D.elems[j]*sigma).
std::vector<int> embed_translated(const Window& D, const GroupElement& sigma, const Window& W) {
    std::vector<int> idx(D.size());
    for (std::size_t j = 0; j < D.size(); ++j) {
        idx[j] = W.index_of(mul(D.elems[j], sigma));
        if (idx[j] < 0) throw Error(ErrorCode::inconsistent, "translated window escapes superwindow");
    }
    return idx;
}

Pattern gather(Pattern a, const std::vector<int>& idx) {
    Pattern p = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) p |= ((a >> idx[j]) & 1u) << j;
    return p;
}

// Enumerates all assignments on W whose restriction to D (given by idx)
// lies in Phi; calls fn(assignment).
template <typename Fn>
void for_each_extension(const Window& W, const std::vector<int>& idx,
                        const std::set<Pattern>& phi, Fn&& fn) {
    std::vector<int> free_pos;
    std::vector<bool> pinned(W.size(), false);
    for (int i : idx) pinned[i] = true;
    for (std::size_t i = 0; i < W.size(); ++i)
        if (!pinned[i]) free_pos.push_back((int)i);
    const Pattern nfree = Pattern(1) << free_pos.size();
    for (Pattern p : phi) {
        Pattern base = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) base |= ((p >> j) & 1u) << idx[j];
        for (Pattern f = 0; f < nfree; ++f) {
            Pattern a = base;
            for (std::size_t j = 0; j < free_pos.size(); ++j)
                a |= ((f >> j) & 1u) << free_pos[j];
            fn(a);
        }
    }
}

} // namespace

ClopenSet empty_clopen(const GroupCtx& ctx) {
    return ClopenSet{Window::of(ctx, {}), {}};
}

ClopenSet cylinder(const Window& window, const std::vector<int>& bits) {
    if (bits.size() != window.size())
        throw Error(ErrorCode::invalid_argument, "cylinder: one bit per window element required");
    Pattern p = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != 0 && bits[j] != 1)
            throw Error(ErrorCode::invalid_argument, "cylinder: bits must be 0 or 1");
        p |= Pattern(bits[j]) << j;
    }
    return ClopenSet{window, {p}};
}

Rational density(const ClopenSet& I) {
    check_bits(I);
    return Rational(BigInt(I.patterns.size()), pow2((unsigned)I.window.size()));
}

ClopenSet shift_pullback(const ClopenSet& I, const GroupElement& sigma) {
    require_same_ctx(I.window.ctx, sigma.ctx, "shift_pullback");
    check_bits(I);
    Window W = translate(I.window, sigma);
    std::vector<int> idx = embed_translated(I.window, sigma, W);
    std::set<Pattern> out;
    for (Pattern p : I.patterns) {
        Pattern q = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) q |= ((p >> j) & 1u) << idx[j];
        out.insert(q);
    }
    return ClopenSet{std::move(W), std::move(out)};
}

ClopenSet extend_to_window(const ClopenSet& I, const Window& W, int bit_cap) {
    check_bits(I);
    check_cap(W.size(), bit_cap, "extend_to_window");
    std::vector<int> idx = embed(I.window, W);
    std::set<Pattern> out;
    for_each_extension(W, idx, I.patterns, [&](Pattern a) { out.insert(a); });
    return ClopenSet{W, std::move(out)};
}

IndependenceResult is_independent(const ClopenSet& I, const Window& F, int bit_cap) {
    require_same_ctx(I.window.ctx, F.ctx, "is_independent");
    require_identity_free(F, "is_independent");
    check_bits(I);
    if (I.patterns.empty()) return {true, std::nullopt};
    for (const auto& sigma : F.elems) {
        Window W = window_union(I.window, translate(I.window, sigma));
        check_cap(W.size(), bit_cap, "is_independent");
        std::vector<int> idx = embed(I.window, W);
        std::vector<int> tidx = embed_translated(I.window, sigma, W);
        IndependenceResult res{true, std::nullopt};
        for_each_extension(W, idx, I.patterns, [&](Pattern a) {
            if (res.witness) return;
            if (I.member(gather(a, tidx)))
                res = {false, IndependenceWitness{sigma, W, a}};
        });
        if (!res.independent) return res;
    }
    return {true, std::nullopt};
}

ClopenSet prune(const ClopenSet& C, const Window& F, int bit_cap) {
    require_same_ctx(C.window.ctx, F.ctx, "prune");
    require_identity_free(F, "prune");
    check_bits(C);
    Window W = C.window;
    for (const auto& sigma : F.elems) W = window_union(W, translate(C.window, sigma));
    check_cap(W.size(), bit_cap, "prune");
    if (C.patterns.empty()) return ClopenSet{W, {}};
    std::vector<int> idx = embed(C.window, W);
    std::vector<std::vector<int>> tidx;
    for (const auto& sigma : F.elems) tidx.push_back(embed_translated(C.window, sigma, W));
    std::set<Pattern> out;
    for_each_extension(W, idx, C.patterns, [&](Pattern a) {
        for (const auto& t : tidx)
            if (C.member(gather(a, t))) return;
        out.insert(a);
    });
    return ClopenSet{std::move(W), std::move(out)};
}

DensityLossReport density_loss_check(const ClopenSet& J, const ClopenSet& C, const Window& F,
                                     int bit_cap) {
    require_same_ctx(J.window.ctx, C.window.ctx, "density_loss_check");
    Window W = window_union(J.window, C.window);
    check_cap(W.size(), bit_cap, "density_loss_check");
    ClopenSet Jw = extend_to_window(J, W, bit_cap);
    ClopenSet Cw = extend_to_window(C, W, bit_cap);
    std::set<Pattern> sym;
    for (Pattern p : Jw.patterns)
        if (!Cw.member(p)) sym.insert(p);
    for (Pattern p : Cw.patterns)
        if (!Jw.member(p)) sym.insert(p);
    DensityLossReport rep;
    rep.beta_j = density(Jw);
    rep.beta_sym_diff = Rational(BigInt(sym.size()), pow2((unsigned)W.size()));
    rep.beta_pruned = density(prune(C, F, bit_cap));
    rep.lower_bound = rep.beta_j - Rational(BigInt(F.size() + 1)) * rep.beta_sym_diff;
    rep.holds = rep.beta_pruned >= rep.lower_bound;
    return rep;
}

ClopenSet minimize_window(const ClopenSet& I) {
    check_bits(I);
    ClopenSet cur = I;
    bool changed = true;
    while (changed && !cur.window.empty()) {
        changed = false;
        for (std::size_t j = 0; j < cur.window.size(); ++j) {
            const Pattern bit = Pattern(1) << j;
            bool droppable = true;
            for (Pattern p : cur.patterns)
                if (!cur.member(p ^ bit)) {
                    droppable = false;
                    break;
                }
            if (!droppable) continue;
            // Project bit j out.
            const Pattern low = bit - 1;
            std::set<Pattern> proj;
            for (Pattern p : cur.patterns)
                if ((p & bit) == 0) proj.insert((p & low) | ((p >> 1) & ~low));
            std::vector<GroupElement> elems = cur.window.elems;
            elems.erase(elems.begin() + (std::ptrdiff_t)j);
            cur = ClopenSet{Window{cur.window.ctx, std::move(elems)}, std::move(proj)};
            changed = true;
            break;
        }
    }
    // Exhaustive equivalence check against the original membership function.
    if (I.window.size() <= (std::size_t)kDefaultBitCap) {
        std::vector<int> idx = embed(cur.window, I.window);
        const Pattern total = Pattern(1) << I.window.size();
        for (Pattern a = 0; a < total; ++a)
            if (I.member(a) != cur.member(gather(a, idx)))
                throw Error(ErrorCode::inconsistent, "minimize_window changed membership");
    }
    return cur;
}

} // namespace frc

#include "group.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace frc {

GroupCtx GroupCtx::free_of_rank(int n) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "free group rank must be >= 1");
    return GroupCtx{GroupKind::free_group, n, 0};
}

GroupCtx GroupCtx::torus_of(int d, int m) {
    if (d < 1) throw Error(ErrorCode::invalid_argument, "torus dimension must be >= 1");
    if (m < 2) throw Error(ErrorCode::invalid_argument, "torus modulus must be >= 2");
    return GroupCtx{GroupKind::torus, d, m};
}

std::string GroupCtx::describe() const {
    if (kind == GroupKind::free_group) return "free(" + std::to_string(rank) + ")";
    return "torus(" + std::to_string(rank) + "," + std::to_string(modulus) + ")";
}

void require_same_ctx(const GroupCtx& a, const GroupCtx& b, const char* where) {
    if (!(a == b))
        throw Error(ErrorCode::context_mismatch,
                    std::string(where) + ": context mismatch (" + a.describe() + " vs " +
                        b.describe() + ")");
}

bool GroupElement::is_identity() const {
    if (ctx.kind == GroupKind::free_group) return rep.empty();
    return std::all_of(rep.begin(), rep.end(), [](int c) { return c == 0; });
}

GroupElement identity(const GroupCtx& ctx) {
    if (ctx.kind == GroupKind::free_group) return GroupElement{ctx, {}};
    return GroupElement{ctx, std::vector<int>(ctx.rank, 0)};
}

GroupElement generator(const GroupCtx& ctx, int i) {
    if (i < 1 || i > ctx.rank)
        throw Error(ErrorCode::invalid_argument, "generator index out of range");
    if (ctx.kind == GroupKind::free_group) return GroupElement{ctx, {i}};
    auto e = identity(ctx);
    e.rep[i - 1] = 1 % ctx.modulus;
    return e;
}

namespace {

void validate(const GroupElement& a) {
    if (a.ctx.kind == GroupKind::free_group) {
        for (std::size_t j = 0; j < a.rep.size(); ++j) {
            int g = a.rep[j];
            if (g == 0 || std::abs(g) > a.ctx.rank)
                throw Error(ErrorCode::invalid_argument, "bad letter in free word");
            if (j > 0 && a.rep[j - 1] == -g)
                throw Error(ErrorCode::invalid_argument, "free word is not reduced");
        }
    } else {
        if ((int)a.rep.size() != a.ctx.rank)
            throw Error(ErrorCode::invalid_argument, "torus vector has wrong dimension");
        for (int c : a.rep)
            if (c < 0 || c >= a.ctx.modulus)
                throw Error(ErrorCode::invalid_argument, "torus coordinate out of range");
    }
}

// Letter order +1 < -1 < +2 < -2 < ...
int letter_key(int g) { return (std::abs(g) - 1) * 2 + (g < 0 ? 1 : 0); }

} // namespace

GroupElement mul(const GroupElement& a, const GroupElement& b) {
    require_same_ctx(a.ctx, b.ctx, "mul");
    validate(a);
    validate(b);
    if (a.ctx.kind == GroupKind::torus) {
        GroupElement r = a;
        for (int j = 0; j < a.ctx.rank; ++j) r.rep[j] = (a.rep[j] + b.rep[j]) % a.ctx.modulus;
        return r;
    }
    GroupElement r = a;
    for (int g : b.rep) {
        if (!r.rep.empty() && r.rep.back() == -g)
            r.rep.pop_back();
        else
            r.rep.push_back(g);
    }
    return r;
}

GroupElement inverse(const GroupElement& a) {
    validate(a);
    if (a.ctx.kind == GroupKind::torus) {
        GroupElement r = a;
        for (int j = 0; j < a.ctx.rank; ++j) r.rep[j] = (a.ctx.modulus - a.rep[j]) % a.ctx.modulus;
        return r;
    }
    GroupElement r = a;
    std::reverse(r.rep.begin(), r.rep.end());
    for (int& g : r.rep) g = -g;
    return r;
}

int word_norm(const GroupElement& a) {
    validate(a);
    if (a.ctx.kind == GroupKind::free_group) return (int)a.rep.size();
    int s = 0;
    for (int c : a.rep) s += std::min(c, a.ctx.modulus - c);
    return s;
}

bool canonical_less(const GroupElement& a, const GroupElement& b) {
    if (a.ctx.kind == GroupKind::free_group) {
        if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
        for (std::size_t j = 0; j < a.rep.size(); ++j)
            if (a.rep[j] != b.rep[j]) return letter_key(a.rep[j]) < letter_key(b.rep[j]);
        return false;
    }
    return a.rep < b.rep;
}

std::string element_to_string(const GroupElement& a) {
    std::string s = "[";
    for (std::size_t j = 0; j < a.rep.size(); ++j) {
        if (j) s += ",";
        if (a.ctx.kind == GroupKind::free_group && a.rep[j] > 0) s += "+";
        s += std::to_string(a.rep[j]);
    }
    return s + "]";
}

Window Window::of(const GroupCtx& ctx, std::vector<GroupElement> elems) {
    for (const auto& e : elems) {
        require_same_ctx(ctx, e.ctx, "Window::of");
        validate(e);
    }
    std::sort(elems.begin(), elems.end(), canonical_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return Window{ctx, std::move(elems)};
}

int Window::index_of(const GroupElement& e) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), e, canonical_less);
    if (it != elems.end() && *it == e) return (int)(it - elems.begin());
    return -1;
}

Window standard_generators(const GroupCtx& ctx) {
    std::vector<GroupElement> gens;
    for (int i = 1; i <= ctx.rank; ++i) gens.push_back(generator(ctx, i));
    return Window::of(ctx, std::move(gens));
}

Window ball(const GroupCtx& ctx, int radius) {
    if (radius < 0) throw Error(ErrorCode::invalid_argument, "ball radius must be >= 0");
    std::vector<GroupElement> out{identity(ctx)};
    std::set<std::vector<int>> seen{identity(ctx).rep};
    std::queue<std::pair<GroupElement, int>> q;
    q.push({identity(ctx), 0});
    while (!q.empty()) {
        auto [e, dist] = q.front();
        q.pop();
        if (dist == radius) continue;
        for (int i = 1; i <= ctx.rank; ++i) {
            for (int sgn : {+1, -1}) {
                GroupElement g = generator(ctx, i);
                if (sgn < 0) g = inverse(g);
                GroupElement next = mul(e, g);
                if (seen.insert(next.rep).second) {
                    out.push_back(next);
                    q.push({next, dist + 1});
                }
            }
        }
    }
    return Window::of(ctx, std::move(out));
}

Window window_product(const Window& D, const Window& E, bool invert_right) {
    require_same_ctx(D.ctx, E.ctx, "window_product");
    std::vector<GroupElement> out;
    out.reserve(D.size() * E.size());
    for (const auto& d : D.elems)
        for (const auto& e : E.elems) out.push_back(mul(d, invert_right ? inverse(e) : e));
    return Window::of(D.ctx, std::move(out));
}

Window translate(const Window& D, const GroupElement& sigma) {
    require_same_ctx(D.ctx, sigma.ctx, "translate");
    std::vector<GroupElement> out;
    out.reserve(D.size());
    for (const auto& d : D.elems) out.push_back(mul(d, sigma));
    return Window::of(D.ctx, std::move(out));
}

Window window_union(const Window& a, const Window& b) {
    require_same_ctx(a.ctx, b.ctx, "window_union");
    std::vector<GroupElement> out = a.elems;
    out.insert(out.end(), b.elems.begin(), b.elems.end());
    return Window::of(a.ctx, std::move(out));
}

} // namespace frc

#include "json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "error.hpp"

namespace frc {

Json ctx_to_json(const GroupCtx& ctx) {
    if (ctx.kind == GroupKind::free_group) return Json{{"kind", "free"}, {"n", ctx.rank}};
    return Json{{"kind", "torus"}, {"d", ctx.rank}, {"m", ctx.modulus}};
}

GroupCtx ctx_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "free") return GroupCtx::free_of_rank(j.at("n").get<int>());
    if (kind == "torus") return GroupCtx::torus_of(j.at("d").get<int>(), j.at("m").get<int>());
    throw Error(ErrorCode::invalid_argument, "unknown group kind: " + kind);
}

Json element_to_json(const GroupElement& e) { return Json(e.rep); }

GroupElement element_from_json(const Json& j, const GroupCtx& ctx) {
    std::vector<int> rep;
    if (j.is_number_integer() && ctx.rank == 1 && ctx.kind == GroupKind::torus) {
        rep = {j.get<int>()};
    } else if (j.is_array()) {
        rep = j.get<std::vector<int>>();
    } else {
        throw Error(ErrorCode::invalid_argument, "element must be an integer list");
    }
    if (ctx.kind == GroupKind::torus) {
        if ((int)rep.size() != ctx.rank)
            throw Error(ErrorCode::invalid_argument, "torus element has wrong dimension");
        for (int& c : rep) c = ((c % ctx.modulus) + ctx.modulus) % ctx.modulus;
        return GroupElement{ctx, std::move(rep)};
    }
    // Free case: reduce the word.
    GroupElement out = identity(ctx);
    for (int g : rep) {
        if (g == 0 || std::abs(g) > ctx.rank)
            throw Error(ErrorCode::invalid_argument, "free word letter out of range");
        GroupElement step = generator(ctx, std::abs(g));
        if (g < 0) step = inverse(step);
        out = mul(out, step);
    }
    return out;
}

Json window_to_json(const Window& w) {
    Json arr = Json::array();
    for (const auto& e : w.elems) arr.push_back(element_to_json(e));
    return arr;
}

Window window_from_json(const Json& j, const GroupCtx& ctx) {
    if (j.is_string()) {
        if (j.get<std::string>() == "std") return standard_generators(ctx);
        throw Error(ErrorCode::invalid_argument, "unknown window shorthand: " + j.get<std::string>());
    }
    if (!j.is_array()) throw Error(ErrorCode::invalid_argument, "window must be a list");
    std::vector<GroupElement> elems;
    for (const auto& item : j) elems.push_back(element_from_json(item, ctx));
    return Window::of(ctx, std::move(elems));
}

Json clopen_to_json(const ClopenSet& I) {
    Json patterns = Json::array();
    for (Pattern p : I.patterns) {
        std::string s(I.window.size(), '0');
        for (std::size_t j = 0; j < I.window.size(); ++j)
            if ((p >> j) & 1u) s[j] = '1';
        patterns.push_back(s);
    }
    return Json{{"ctx", ctx_to_json(I.window.ctx)},
                {"window", window_to_json(I.window)},
                {"patterns", patterns}};
}

ClopenSet clopen_from_json(const Json& j) {
    GroupCtx ctx = ctx_from_json(j.at("ctx"));
    Window w = window_from_json(j.at("window"), ctx);
    std::set<Pattern> patterns;
    for (const auto& item : j.at("patterns")) {
        std::string s = item.get<std::string>();
        if (s.size() != w.size())
            throw Error(ErrorCode::invalid_argument,
                        "pattern \"" + s + "\" does not match window size " +
                            std::to_string(w.size()));
        Pattern p = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] != '0' && s[k] != '1')
                throw Error(ErrorCode::invalid_argument, "pattern must be a 0/1 string");
            if (s[k] == '1') p |= Pattern(1) << k;
        }
        patterns.insert(p);
    }
    return ClopenSet{std::move(w), std::move(patterns)};
}

Json instance_to_json(const SchreierInstance& S) {
    Json maps = Json::array();
    for (const auto& m : S.gen_maps) {
        Json row = Json::array();
        for (int t : m) {
            if (t < 0)
                row.push_back(nullptr);
            else
                row.push_back(t);
        }
        maps.push_back(row);
    }
    return Json{{"ctx", ctx_to_json(S.ctx)},
                {"vertices", S.vertex_count},
                {"gen_maps", maps},
                {"seed", S.seed},
                {"provenance", S.provenance}};
}

SchreierInstance instance_from_json(const Json& j) {
    GroupCtx ctx = ctx_from_json(j.at("ctx"));
    int vertices = j.at("vertices").get<int>();
    std::vector<std::vector<int>> maps;
    for (const auto& row : j.at("gen_maps")) {
        std::vector<int> m;
        for (const auto& t : row) m.push_back(t.is_null() ? -1 : t.get<int>());
        maps.push_back(std::move(m));
    }
    auto S = SchreierInstance::of(ctx, vertices, std::move(maps));
    S.seed = j.value("seed", std::uint64_t(0));
    S.provenance = j.value("provenance", std::string());
    return S;
}

Json decoration_to_json(const Decoration& D) {
    Json maps = Json::array();
    for (const auto& m : D.gen_maps) {
        Json row = Json::array();
        for (int t : m) {
            if (t < 0)
                row.push_back(nullptr);
            else
                row.push_back(t);
        }
        maps.push_back(row);
    }
    return Json{{"graph", graph_to_json(D.graph)},
                {"gen_maps", maps},
                {"certified", D.certified}};
}

Decoration decoration_from_json(const Json& j) {
    Decoration D;
    D.graph = graph_from_json(j.at("graph"));
    for (const auto& row : j.at("gen_maps")) {
        std::vector<int> m;
        for (const auto& t : row) m.push_back(t.is_null() ? -1 : t.get<int>());
        D.gen_maps.push_back(std::move(m));
    }
    D.certified = j.at("certified").get<std::vector<int>>();
    validate_decoration(D);
    return D;
}

Json graph_to_json(const GraphInstance& G) {
    Json edges = Json::array();
    for (auto [u, v] : G.edges) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", G.vertex_count}, {"edges", edges}, {"multigraph", G.multigraph}};
}

GraphInstance graph_from_json(const Json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return GraphInstance::of(j.at("vertices").get<int>(), std::move(edges),
                             j.value("multigraph", false));
}

std::string graph_to_edge_list(const GraphInstance& G) {
    std::ostringstream out;
    for (auto [u, v] : G.edges) out << u << " " << v << "\n";
    return out.str();
}

GraphInstance graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int u, v, max_v = -1;
    while (in >> u >> v) {
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    return GraphInstance::of(max_v + 1, std::move(edges));
}

} // namespace frc

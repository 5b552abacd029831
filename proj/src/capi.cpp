#include "fracolor.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "core/clopen.hpp"
#include "core/decoration.hpp"
#include "core/engine.hpp"
#include "core/error.hpp"
#include "core/heuristics.hpp"
#include "core/instance.hpp"
#include "core/json_io.hpp"
#include "core/lp.hpp"
#include "core/rational.hpp"

using namespace frc;

struct frc_rule {
    ClopenSet value;
};
struct frc_instance {
    SchreierInstance value;
};
struct frc_graph {
    GraphInstance value;
};

namespace {

thread_local std::string g_last_error = "no error";

frc_status map_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::invalid_argument: return FRC_EINVAL;
        case ErrorCode::context_mismatch: return FRC_ECTX;
        case ErrorCode::cap_exceeded: return FRC_ECAP;
        case ErrorCode::precondition: return FRC_EPRECOND;
        case ErrorCode::inconsistent: return FRC_EINCONSISTENT;
        case ErrorCode::budget_exhausted: return FRC_EBUDGET;
    }
    return FRC_EINTERNAL;
}

template <typename Fn>
frc_status guard(Fn&& fn) {
    try {
        fn();
        return FRC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return FRC_EPARSE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FRC_EINTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FRC_EINTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename T>
T* require(T* p, const char* what) {
    if (!p) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
    return p;
}

Json parse_json(const char* text, const char* what) {
    return Json::parse(require(text, what));
}

Json options_or_empty(const char* text) {
    if (!text || !*text) return Json::object();
    return Json::parse(text);
}

Window parse_f(const char* f_json, const GroupCtx& ctx) {
    return window_from_json(parse_json(f_json, "F"), ctx);
}

// Always "p/q", never the bare-integer shorthand; report fields stay
// shape-stable across values.
std::string frac(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.template convert_to<double>(); }

std::string pattern_string(Pattern p, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j)
        if ((p >> j) & 1u) s[j] = '1';
    return s;
}

} // namespace

extern "C" {

const char* frc_last_error(void) { return g_last_error.c_str(); }

void frc_string_free(char* s) { delete[] s; }
void frc_rule_free(frc_rule* r) { delete r; }
void frc_instance_free(frc_instance* s) { delete s; }
void frc_graph_free(frc_graph* g) { delete g; }

frc_status frc_rule_parse(const char* json, frc_rule** out) {
    return guard([&] {
        require(out, "out");
        *out = new frc_rule{clopen_from_json(parse_json(json, "rule"))};
    });
}

frc_status frc_rule_to_json(const frc_rule* r, char** out) {
    return guard([&] {
        require(r, "rule");
        *out = copy_string(clopen_to_json(r->value).dump());
    });
}

frc_status frc_rule_density(const frc_rule* r, char** out) {
    return guard([&] {
        require(r, "rule");
        *out = copy_string(frac(density(r->value)));
    });
}

frc_status frc_rule_prune(const frc_rule* r, const char* f_json, frc_rule** out) {
    return guard([&] {
        require(r, "rule");
        Window F = parse_f(f_json, r->value.window.ctx);
        *out = new frc_rule{prune(r->value, F)};
    });
}

frc_status frc_rule_is_independent(const frc_rule* r, const char* f_json, int* independent,
                                   char** witness_json) {
    return guard([&] {
        require(r, "rule");
        require(independent, "independent");
        Window F = parse_f(f_json, r->value.window.ctx);
        auto res = is_independent(r->value, F);
        *independent = res.independent ? 1 : 0;
        if (witness_json) {
            *witness_json = nullptr;
            if (res.witness) {
                Json w{{"sigma", element_to_json(res.witness->sigma)},
                       {"window", window_to_json(res.witness->joint)},
                       {"assignment",
                        pattern_string(res.witness->assignment, res.witness->joint.size())}};
                *witness_json = copy_string(w.dump());
            }
        }
    });
}

frc_status frc_rule_minimize(const frc_rule* r, frc_rule** out) {
    return guard([&] {
        require(r, "rule");
        *out = new frc_rule{minimize_window(r->value)};
    });
}

frc_status frc_rule_hashmax(const char* ctx_json, const char* f_json, int radius,
                            frc_rule** out) {
    return guard([&] {
        GroupCtx ctx = ctx_from_json(parse_json(ctx_json, "ctx"));
        Window F = parse_f(f_json, ctx);
        *out = new frc_rule{hashmax_rule(ctx, F, radius)};
    });
}

frc_status frc_rule_estimate_density(const frc_rule* r, long samples, uint64_t seed,
                                     char** report_json) {
    return guard([&] {
        require(r, "rule");
        auto est = estimate_density(r->value, samples, seed);
        Json rep{{"mean", est.mean},
                 {"std_error", est.std_error},
                 {"samples", est.samples},
                 {"seed", est.seed},
                 {"exact_density", frac(density(r->value))}};
        *report_json = copy_string(rep.dump());
    });
}

frc_status frc_instance_torus(int d, int m, frc_instance** out) {
    return guard([&] { *out = new frc_instance{torus_instance(d, m)}; });
}

frc_status frc_instance_parse(const char* json, frc_instance** out) {
    return guard([&] { *out = new frc_instance{instance_from_json(parse_json(json, "instance"))}; });
}

frc_status frc_instance_from_decoration(const char* decoration_json, frc_instance** out) {
    return guard([&] {
        Decoration D = decoration_from_json(parse_json(decoration_json, "decoration"));
        *out = new frc_instance{to_instance(D)};
    });
}

frc_status frc_instance_to_json(const frc_instance* s, char** out) {
    return guard([&] {
        require(s, "instance");
        *out = copy_string(instance_to_json(s->value).dump());
    });
}

frc_status frc_graph_random_regular(int n_gens, int vertices, uint64_t seed, frc_graph** out) {
    return guard([&] { *out = new frc_graph{random_regular(n_gens, vertices, seed)}; });
}

frc_status frc_graph_from_edge_list(const char* text, frc_graph** out) {
    return guard([&] { *out = new frc_graph{graph_from_edge_list(require(text, "edge list"))}; });
}

frc_status frc_graph_to_edge_list(const frc_graph* g, char** out) {
    return guard([&] {
        require(g, "graph");
        *out = copy_string(graph_to_edge_list(g->value));
    });
}

frc_status frc_graph_of_instance(const frc_instance* s, const char* f_json, frc_graph** out) {
    return guard([&] {
        require(s, "instance");
        Window F = parse_f(f_json, s->value.ctx);
        *out = new frc_graph{schreier_graph(s->value, F)};
    });
}

frc_status frc_graph_cycle(int n, frc_graph** out) {
    return guard([&] { *out = new frc_graph{cycle_graph(n)}; });
}

frc_status frc_graph_complete(int n, frc_graph** out) {
    return guard([&] { *out = new frc_graph{complete_graph(n)}; });
}

frc_status frc_graph_petersen(frc_graph** out) {
    return guard([&] { *out = new frc_graph{petersen_graph()}; });
}

frc_status frc_graph_multiround(const frc_graph* g, int rounds, uint64_t seed,
                                char** report_json) {
    return guard([&] {
        require(g, "graph");
        auto [selected, est] = multiround_greedy(g->value, rounds, seed);
        int deg = g->value.regular_degree();
        Json rep{{"selected", selected},
                 {"size", selected.size()},
                 {"density", est.mean},
                 {"rounds", rounds},
                 {"seed", seed},
                 {"degree", deg},
                 {"rv_reference", deg >= 3 ? Json(rv_reference(deg)) : Json(nullptr)}};
        *report_json = copy_string(rep.dump());
    });
}

frc_status frc_synth(const frc_instance* s, const frc_rule* r, const char* f_json,
                     const char* options_json, char** report_json) {
    return guard([&] {
        require(s, "instance");
        require(r, "rule");
        Json opts = options_or_empty(options_json);
        Window F = parse_f(f_json, s->value.ctx);
        ClopenSet rule = r->value;
        if (opts.value("prune", false)) rule = prune(rule, F);

        SynthOptions so;
        so.n_cap = opts.value("n_cap", so.n_cap);
        so.bit_cap = opts.value("bit_cap", so.bit_cap);
        so.compact_colors = opts.value("compact_colors", so.compact_colors);
        so.allow_empty_f = opts.value("allow_empty_f", so.allow_empty_f);

        auto K = synthesize(s->value, rule, F, so);
        GraphInstance G = F.empty() ? GraphInstance::of(s->value.vertex_count, {})
                                    : schreier_graph(s->value, F);
        auto rep = verify(K, G);

        Rational domain_fraction =
            s->value.vertex_count
                ? Rational((long)K.domain.size(), (long)s->value.vertex_count)
                : Rational(1);
        Json out{{"ell", K.ell},
                 {"k", K.fold.str()},
                 {"ratio", frac(K.ratio)},
                 {"ratio_decimal", to_double(K.ratio)},
                 {"palette", K.palette},
                 {"domain_size", K.domain.size()},
                 {"domain_fraction", frac(domain_fraction)},
                 {"rule_density", frac(density(rule))},
                 {"wrap_around_risk", K.wrap_around_risk},
                 {"verified", rep.pass},
                 {"counterexample", rep.counterexample}};
        *report_json = copy_string(out.dump());
    });
}

frc_status frc_oracle(const frc_graph* g, const char* options_json, char** report_json) {
    return guard([&] {
        require(g, "graph");
        Json opts = options_or_empty(options_json);
        int k_max = opts.value("k_max", 2);
        int cap = opts.value("vertex_cap", kDefaultLpVertexCap);
        if (k_max < 1) throw Error(ErrorCode::invalid_argument, "k_max must be >= 1");

        auto lp = fractional_chromatic(g->value, cap);
        auto a = independence_number(g->value, cap);
        Json chik = Json::array();
        for (int k = 1; k <= k_max; ++k) {
            auto r = kfold_chromatic(g->value, k, cap);
            chik.push_back(Json{{"k", k}, {"ell", r.ell}});
        }
        Json support = Json::array();
        for (const auto& [set, w] : lp.support)
            support.push_back(Json{{"set", set}, {"weight", frac(w)}});
        Json out{{"chi_star", frac(lp.value)},
                 {"chi_star_decimal", to_double(lp.value)},
                 {"alpha", a.value},
                 {"alpha_witness", a.witness},
                 {"chi_k", chik},
                 {"support", support},
                 {"vertex_transitive", g->value.vertex_count <= 12
                                           ? Json(is_vertex_transitive(g->value))
                                           : Json(nullptr)}};
        *report_json = copy_string(out.dump());
    });
}

frc_status frc_decorate(const frc_graph* g, const char* options_json, char** report_json) {
    return guard([&] {
        require(g, "graph");
        Json opts = options_or_empty(options_json);
        bool full = opts.value("full", false);
        int deg = g->value.regular_degree();
        int n_gens = opts.value("n_gens", deg > 0 ? (deg + 1) / 2
                                                  : (g->value.max_degree() + 1) / 2);
        Decoration D = full ? full_decoration(g->value) : partial_decoration(g->value, n_gens);
        Json out{{"decoration", decoration_to_json(D)},
                 {"certified_count", D.certified.size()},
                 {"certified_fraction", frac(D.certified_fraction())},
                 {"full", (int)D.certified.size() == g->value.vertex_count}};
        *report_json = copy_string(out.dump());
    });
}

} // extern "C"

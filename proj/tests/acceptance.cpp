// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the CLI binary (used by the criteria that exercise
// the command-line surface).

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"

#include "core/clopen.hpp"
#include "core/decoration.hpp"
#include "core/engine.hpp"
#include "core/heuristics.hpp"
#include "core/instance.hpp"
#include "core/lp.hpp"

using namespace frc;
using nlohmann::json;

namespace {

std::string g_cli;

struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    CliRun r;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

GroupElement tor(const GroupCtx& ctx, std::vector<int> rep) {
    for (int& c : rep) c = ((c % ctx.modulus) + ctx.modulus) % ctx.modulus;
    return GroupElement{ctx, std::move(rep)};
}

// Random nonempty window from a small fixed pool, so pattern-window products
// stay below the palette cap used throughout the matrix.
Window small_window(const GroupCtx& ctx, std::mt19937_64& rng) {
    std::vector<GroupElement> pool;
    if (ctx.rank == 1) {
        pool = {tor(ctx, {0}), tor(ctx, {1}), tor(ctx, {2})};
    } else {
        pool = {tor(ctx, {0, 0}), tor(ctx, {1, 0})};
    }
    std::vector<GroupElement> es;
    for (const auto& e : pool)
        if (rng() & 1) es.push_back(e);
    if (es.empty()) es.push_back(pool[rng() % pool.size()]);
    return Window::of(ctx, std::move(es));
}

ClopenSet random_pruned_cylinder(const GroupCtx& ctx, const Window& F, std::mt19937_64& rng) {
    Window D = small_window(ctx, rng);
    Pattern q = rng() & ((Pattern(1) << D.size()) - 1);
    return prune(ClopenSet{D, {q}}, F);
}

ClopenSet random_pruned_rule(const GroupCtx& ctx, const Window& F, std::mt19937_64& rng) {
    Window D = small_window(ctx, rng);
    std::set<Pattern> pats;
    for (Pattern p = 0; p < (Pattern(1) << D.size()); ++p)
        if (rng() % 3 == 0) pats.insert(p);
    return prune(ClopenSet{D, pats}, F);
}

// Rotation action of the m-cycle with one arc removed; the domain of the
// synthesized coloring is then a strict subset of the vertices.
SchreierInstance cut_cycle_instance(int m) {
    std::vector<int> p(m);
    for (int v = 0; v < m; ++v) p[v] = (v + 1) % m;
    p[0] = -1;
    return SchreierInstance::of(GroupCtx::free_of_rank(1), m, {p});
}

Decoration cut_cycle_decoration(int m) {
    Decoration D;
    D.graph = cycle_graph(m);
    std::vector<int> p(m);
    for (int v = 0; v < m; ++v) p[v] = (v + 1) % m;
    p[0] = -1;
    D.gen_maps = {p};
    D.certified = recompute_certified(D.graph, D.gen_maps);
    return D;
}

// ---- criteria ----------------------------------------------------------

bool crit_cycle5_oracle(std::string& detail) {
    auto r = run_cli("oracle --graph cycle:5 --k-max 2 --no-timestamp");
    if (r.exit_code != 0) {
        detail = "oracle exit " + std::to_string(r.exit_code);
        return false;
    }
    json rep = json::parse(r.output, nullptr, false);
    if (rep.is_discarded()) {
        detail = "unparsable oracle output";
        return false;
    }
    bool ok = rep.at("chi_star") == "5/2" && rep.at("chi_k")[0].at("k") == 1 &&
              rep.at("chi_k")[0].at("ell") == 3 && rep.at("chi_k")[1].at("k") == 2 &&
              rep.at("chi_k")[1].at("ell") == 5;
    if (!ok) detail = "wrong numbers: " + rep.dump();
    return ok;
}

bool crit_exact_coverage(std::string& detail) {
    int runs = 0;
    for (int d : {1, 2}) {
        for (int m : {5, 7, 9}) {
            auto S = torus_instance(d, m);
            Window F = standard_generators(S.ctx);
            auto G = schreier_graph(S, F);
            std::mt19937_64 rng(100u * d + (unsigned)m);
            int done = 0;
            for (int guard = 0; done < 4 && guard < 400; ++guard) {
                auto rule = random_pruned_cylinder(S.ctx, F, rng);
                if (rule.patterns.empty()) continue;
                auto K = synthesize(S, rule, F);
                if (K.palette > 18) {
                    detail = "palette " + std::to_string(K.palette) + " above 18";
                    return false;
                }
                auto rep = verify(K, G);
                if (!rep.pass) {
                    detail = "verify failed on torus(" + std::to_string(d) + "," +
                             std::to_string(m) + "): " + rep.counterexample;
                    return false;
                }
                if ((int)K.domain.size() != S.vertex_count) {
                    detail = "torus domain not total";
                    return false;
                }
                ++done;
                ++runs;
            }
        }
    }
    if (runs < 20) {
        detail = "only " + std::to_string(runs) + " runs";
        return false;
    }
    detail = std::to_string(runs) + " verified runs";
    return true;
}

bool crit_ratio_identity(std::string& detail) {
    int checked = 0;
    std::array<std::pair<int, int>, 4> shapes{{{1, 5}, {1, 7}, {1, 9}, {2, 5}}};
    std::mt19937_64 rng(424242);
    while (checked < 200) {
        auto [d, m] = shapes[rng() % shapes.size()];
        auto S = torus_instance(d, m);
        Window F = standard_generators(S.ctx);
        auto rule = random_pruned_rule(S.ctx, F, rng);
        if (rule.patterns.empty()) continue;
        auto K = synthesize(S, rule, F);
        if (K.ratio != Rational(1) / density(rule)) {
            detail = "ratio mismatch on rule with density " + rational_to_string(density(rule));
            return false;
        }
        ++checked;
    }
    detail = "200 exact identities";
    return true;
}

bool crit_pruning_loss(std::string& detail) {
    std::mt19937_64 rng(7777);
    auto ctx = GroupCtx::torus_of(1, 7);
    Window F = standard_generators(ctx);
    int checked = 0;
    while (checked < 100) {
        // J independent by construction; C is J with one pattern toggled
        ClopenSet J = random_pruned_rule(ctx, F, rng);
        ClopenSet C = J;
        Pattern flip = rng() & ((Pattern(1) << C.window.size()) - 1);
        if (C.patterns.count(flip))
            C.patterns.erase(flip);
        else
            C.patterns.insert(flip);
        auto rep = density_loss_check(J, C, F);
        if (!rep.holds) {
            detail = "inequality failed: beta_pruned " + rational_to_string(rep.beta_pruned) +
                     " < bound " + rational_to_string(rep.lower_bound);
            return false;
        }
        ++checked;
    }
    detail = "100 pairs hold";
    return true;
}

bool crit_power_graph_bound(std::string& detail) {
    struct Case {
        int d, m;
        std::vector<std::vector<int>> window;
    };
    std::vector<Case> cases = {
        {1, 9, {{0}, {1}}},
        {1, 9, {{0}, {1}, {2}}},
        {1, 11, {{0}, {2}, {3}}},
        {2, 7, {{0, 0}, {1, 0}, {0, 1}}},
        {2, 9, {{0, 0}, {1, 0}, {1, 1}}},
    };
    for (const auto& c : cases) {
        auto S = torus_instance(c.d, c.m);
        std::vector<GroupElement> es;
        for (const auto& rep : c.window) es.push_back(tor(S.ctx, rep));
        Window D = Window::of(S.ctx, es);
        int N = (int)window_product(D, D).size();
        auto H = auxiliary_graph(S, D);
        if (H.max_degree() > N - 1) {
            detail = "degree " + std::to_string(H.max_degree()) + " > N-1 = " +
                     std::to_string(N - 1);
            return false;
        }
        std::vector<int> order(H.vertex_count);
        for (int i = 0; i < H.vertex_count; ++i) order[i] = i;
        auto f = greedy_coloring(H, order, N);
        if (f.colors_used > N) {
            detail = "greedy used " + std::to_string(f.colors_used) + " > N";
            return false;
        }
    }
    detail = std::to_string(cases.size()) + " instances within degree and color bounds";
    return true;
}

bool crit_oracle_consistency(std::string& detail) {
    // engine ratio vs LP optimum on every <= 12 vertex instance here
    for (int m : {5, 7, 9, 11}) {
        auto S = torus_instance(1, m);
        Window F = standard_generators(S.ctx);
        ClopenSet rule = prune(ClopenSet{Window::of(S.ctx, {tor(S.ctx, {0})}), {1}}, F);
        auto K = synthesize(S, rule, F);
        auto lp = fractional_chromatic(schreier_graph(S, F));
        if (K.ratio < lp.value) {
            detail = "ratio below chi* on the " + std::to_string(m) + "-cycle";
            return false;
        }
        if (m == 5 && (K.ratio != Rational(4) || lp.value != Rational(5, 2))) {
            detail = "5-cycle numbers off";
            return false;
        }
    }
    for (const auto& G : {cycle_graph(5), cycle_graph(7), petersen_graph()}) {
        if (!is_vertex_transitive(G)) {
            detail = "expected vertex-transitive graph";
            return false;
        }
        auto lp = fractional_chromatic(G);
        auto a = independence_number(G);
        if (lp.value != Rational(G.vertex_count, a.value)) {
            detail = "chi* != |V|/alpha on a vertex-transitive graph";
            return false;
        }
    }
    detail = "ratio >= chi* on 4 instances; |V|/alpha identity on 3 graphs";
    return true;
}

bool crit_decoration(std::string& detail) {
    int count = 0;
    auto check_full = [&](int n, int vertices, std::uint64_t seed) -> bool {
        auto G = random_regular(n, vertices, seed);
        auto D = full_decoration(G);
        validate_decoration(D);
        if (D.certified_fraction() != Rational(1)) return false;
        // edge partition: each map pair used exactly once
        std::size_t mapped = 0;
        for (const auto& p : D.gen_maps)
            for (int t : p)
                if (t >= 0) ++mapped;
        if (mapped != G.edges.size()) return false;
        ++count;
        return true;
    };
    for (int i = 0; i < 17; ++i)
        if (!check_full(1, 200 + 110 * i, 1000 + i)) {
            detail = "2-regular run " + std::to_string(i) + " failed";
            return false;
        }
    for (int i = 0; i < 17; ++i)
        if (!check_full(2, 200 + 110 * i, 2000 + i)) {
            detail = "4-regular run " + std::to_string(i) + " failed";
            return false;
        }
    for (int i = 0; i < 16; ++i)
        if (!check_full(3, 30 + 2 * i, 3000 + i)) {
            detail = "6-regular run " + std::to_string(i) + " failed";
            return false;
        }
    if (count != 50) {
        detail = "expected 50 decorations, got " + std::to_string(count);
        return false;
    }
    // mass bookkeeping on instances with a deliberate defect pair
    for (int m : {9, 15, 21}) {
        auto D = cut_cycle_decoration(m);
        auto mu = uniform_measure(m);
        for (int k : {1, 2}) {
            auto rep = ck_mass_bound_check(D, mu, k, Rational(1, 2));
            if (!rep.implication_holds || !rep.averaging_chain_holds) {
                detail = "mass bound failed on the cut " + std::to_string(m) + "-cycle";
                return false;
            }
        }
    }
    detail = "50 full decorations; mass bounds hold on 6 defect cases";
    return true;
}

bool crit_phi_averaging(std::string& detail) {
    // full-domain runs: average mass is exactly k / ell
    for (int m : {5, 7}) {
        auto S = torus_instance(1, m);
        Window F = standard_generators(S.ctx);
        ClopenSet rule = prune(ClopenSet{Window::of(S.ctx, {tor(S.ctx, {0})}), {1}}, F);
        auto K = synthesize(S, rule, F);
        auto avg = average_density_bound(K, uniform_measure(S.vertex_count));
        if (avg.average != Rational(K.fold, BigInt(K.ell))) {
            detail = "full-domain average is not k/ell";
            return false;
        }
        if (avg.max_mass < avg.average) {
            detail = "max below average";
            return false;
        }
    }
    // partial-domain run: average is k * mu(domain) / ell, max still dominates
    auto S = cut_cycle_instance(9);
    auto g = generator(S.ctx, 1);
    Window F = Window::of(S.ctx, {g});
    ClopenSet rule = prune(ClopenSet{Window::of(S.ctx, {identity(S.ctx)}), {1}}, F);
    auto K = synthesize(S, rule, F);
    if (K.domain.size() == 0 || (int)K.domain.size() == S.vertex_count) {
        detail = "expected a strict partial domain";
        return false;
    }
    auto avg = average_density_bound(K, uniform_measure(9));
    Rational expected =
        Rational(K.fold * BigInt(K.domain.size()), BigInt(K.ell) * BigInt(9));
    if (avg.average != expected) {
        detail = "partial-domain average mismatch";
        return false;
    }
    if (avg.max_mass < avg.average) {
        detail = "max below average on partial domain";
        return false;
    }
    detail = "exact k/ell on full domains; weighted identity on the partial one";
    return true;
}

bool crit_statistics(std::string& detail) {
    auto ctx = GroupCtx::torus_of(1, 7);
    Window F = standard_generators(ctx);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(9000 + seed);
        ClopenSet rule = random_pruned_rule(ctx, F, rng);
        while (rule.patterns.empty()) rule = random_pruned_rule(ctx, F, rng);
        double beta = density(rule).convert_to<double>();
        auto est = estimate_density(rule, 100000, seed);
        double tol = 4.0 * std::sqrt(beta * (1.0 - beta) / 100000.0);
        if (std::abs(est.mean - beta) > tol) {
            detail = "seed " + std::to_string(seed) + ": mean " + std::to_string(est.mean) +
                     " vs exact " + std::to_string(beta);
            return false;
        }
    }
    // local-maximum rule densities against symbolic counts
    auto f1 = GroupCtx::free_of_rank(1);
    auto f2 = GroupCtx::free_of_rank(2);
    auto t5 = GroupCtx::torus_of(1, 5);
    if (density(hashmax_rule(f1, standard_generators(f1), 0)) != Rational(1, 8) ||
        density(hashmax_rule(f2, standard_generators(f2), 0)) != Rational(1, 32) ||
        density(hashmax_rule(t5, standard_generators(t5), 0)) != Rational(1, 8)) {
        detail = "radius-0 local-maximum density mismatch";
        return false;
    }
    // radius 1 on the line vs an independent enumeration
    int wins = 0;
    for (int bits = 0; bits < 32; ++bits) {
        int a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1;
        int e = (bits >> 3) & 1, f = (bits >> 4) & 1;
        int center = a + 2 * b + 4 * c;
        if (center > b + 2 * e + 4 * a && center > c + 2 * a + 4 * f) ++wins;
    }
    if (density(hashmax_rule(f1, standard_generators(f1), 1)) != Rational(wins, 32)) {
        detail = "radius-1 local-maximum density mismatch";
        return false;
    }
    detail = "20 estimates within 4 standard errors; symbolic counts match";
    return true;
}

bool crit_reproducibility(std::string& detail) {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "fracolor-acceptance";
    fs::create_directories(dir);
    fs::path rule_path = dir / "rule.json";
    {
        std::ofstream out(rule_path);
        out << R"({"ctx": {"kind": "torus", "d": 1, "m": 5}, "window": [[0], [1]],)"
            << R"( "patterns": ["10"]})";
    }
    std::vector<std::string> commands = {
        "synth --instance torus:1:5 --rule file:" + rule_path.string() + " --no-timestamp",
        "oracle --graph cycle:5 --k-max 2 --no-timestamp",
        "oracle --graph petersen --k-max 1 --no-timestamp",
        "decorate --graph complete:5 --full --no-timestamp",
        "decorate --graph random:2:100:5 --full --no-timestamp",
        "density --rule hashmax:free:2:0 --multiround random:2:60:9 --runs 3 "
        "--samples 20000 --seed 17 --no-timestamp",
        "minimize-window --rule " + rule_path.string(),
    };
    for (const auto& cmd : commands) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        if (a.exit_code != 0 || b.exit_code != 0) {
            detail = "nonzero exit for: " + cmd;
            return false;
        }
        if (a.output != b.output) {
            detail = "outputs differ for: " + cmd;
            return false;
        }
        if (a.output.empty()) {
            detail = "empty output for: " + cmd;
            return false;
        }
    }
    detail = std::to_string(commands.size()) + " commands byte-identical on rerun";
    return true;
}

struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
    double limit_seconds;
};

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    const Criterion criteria[] = {
        {"1 cycle-5 oracle numbers (chi*=5/2, 1-fold 3, 2-fold 5)", crit_cycle5_oracle, 5.0},
        {"2 exact coverage matrix (>=20 torus runs)", crit_exact_coverage, 60.0},
        {"3 ratio identity ell/k = 1/density (200 rules)", crit_ratio_identity, 120.0},
        {"4 pruning loss inequality (100 pairs)", crit_pruning_loss, 30.0},
        {"5 power-graph degree and greedy color bounds", crit_power_graph_bound, 10.0},
        {"6 engine ratio >= chi*; |V|/alpha identity", crit_oracle_consistency, 30.0},
        {"7 full decorations (50 graphs) + mass bounds", crit_decoration, 20.0},
        {"8 phi-averaging exact identities", crit_phi_averaging, 60.0},
        {"9 statistical sanity (20 seeded estimates)", crit_statistics, 30.0},
        {"10 byte-identical CLI reruns", crit_reproducibility, 60.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (ok && secs > c.limit_seconds) {
            ok = false;
            detail = "over time budget";
        }
        std::printf("criterion %s: %s (%.2fs%s%s)\n", c.name, ok ? "PASS" : "FAIL", secs,
                    detail.empty() ? "" : "; ", detail.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

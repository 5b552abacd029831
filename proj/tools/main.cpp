// fracolor command-line front end. All computation goes through the C API
// in fracolor.h; this file only parses flags, moves text around, and maps
// results to exit codes (0 verified/ok, 1 defect reported, 2 usage or
// precondition error).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracolor.h"

namespace {

using nlohmann::json;

// Fixed default so reruns without an explicit --seed are reproducible.
constexpr std::uint64_t kDefaultSeed = 1729;

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "fracolor: " << msg << "\n";
    std::exit(2);
}

void check(frc_status st) {
    if (st != FRC_OK) die(frc_last_error());
}

std::string take(char* s) {
    std::string out = s ? s : "";
    frc_string_free(s);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die("cannot write file: " + out_path);
    out << text;
}

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        die("expected an integer for " + what + ", got \"" + s + "\"");
    }
}

// "torus:d:m", "file:path", "decoration:path", or a bare path to an
// instance JSON file.
frc_instance* load_instance(const std::string& spec) {
    frc_instance* out = nullptr;
    auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "torus") {
        check(frc_instance_torus(to_int(parts[1], "torus dimension"),
                                 to_int(parts[2], "torus modulus"), &out));
        return out;
    }
    if (parts.size() == 2 && parts[0] == "decoration") {
        check(frc_instance_from_decoration(slurp(parts[1]).c_str(), &out));
        return out;
    }
    std::string path = (parts.size() == 2 && parts[0] == "file") ? parts[1] : spec;
    std::string text = slurp(path);
    if (json::accept(text) && json::parse(text).contains("graph")) {
        check(frc_instance_from_decoration(text.c_str(), &out));
        return out;
    }
    check(frc_instance_parse(text.c_str(), &out));
    return out;
}

// "cycle:n", "complete:n", "petersen", "random:n_gens:V:seed", "file:path",
// or a bare path to an edge-list file.
frc_graph* load_graph(const std::string& spec) {
    frc_graph* out = nullptr;
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "cycle") {
        check(frc_graph_cycle(to_int(parts[1], "cycle size"), &out));
        return out;
    }
    if (parts.size() == 2 && parts[0] == "complete") {
        check(frc_graph_complete(to_int(parts[1], "complete size"), &out));
        return out;
    }
    if (spec == "petersen") {
        check(frc_graph_petersen(&out));
        return out;
    }
    if (parts.size() == 4 && parts[0] == "random") {
        check(frc_graph_random_regular(to_int(parts[1], "generator count"),
                                       to_int(parts[2], "vertex count"),
                                       (std::uint64_t)std::stoull(parts[3]), &out));
        return out;
    }
    std::string path = (parts.size() == 2 && parts[0] == "file") ? parts[1] : spec;
    check(frc_graph_from_edge_list(slurp(path).c_str(), &out));
    return out;
}

std::string ctx_of_instance(frc_instance* inst) {
    char* text = nullptr;
    check(frc_instance_to_json(inst, &text));
    return json::parse(take(text)).at("ctx").dump();
}

// "file:path", bare path, or "hashmax:RADIUS" (context taken from the
// instance).
frc_rule* load_rule(const std::string& spec, frc_instance* inst, const std::string& f_json) {
    frc_rule* out = nullptr;
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "hashmax") {
        if (!inst) die("hashmax rules need an --instance for the group context");
        check(frc_rule_hashmax(ctx_of_instance(inst).c_str(), f_json.c_str(),
                               to_int(parts[1], "hashmax radius"), &out));
        return out;
    }
    std::string path = (parts.size() == 2 && parts[0] == "file") ? parts[1] : spec;
    check(frc_rule_parse(slurp(path).c_str(), &out));
    return out;
}

// Symmetrized degree of the target graph, read from the rule's context and
// the F window text: "std" means one generator pair per rank.
int degree_of(const std::string& rule_json, const std::string& f_json) {
    json f = json::parse(f_json);
    if (f.is_array()) return 2 * (int)f.size();
    json ctx = json::parse(rule_json).at("ctx");
    return 2 * (ctx.at("kind") == "free" ? ctx.at("n").get<int>() : ctx.at("d").get<int>());
}

std::string csv_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return "";
    if (j.at(key).is_string()) return j.at(key).get<std::string>();
    std::ostringstream out;
    out << j.at(key);
    return out.str();
}

struct CommonFlags {
    std::uint64_t seed = kDefaultSeed;
    int threads = 1; // orchestration is single-threaded; accepted for scripts
    std::string out_path;
    bool no_timestamp = false;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& c) {
    cmd->add_option("--seed", c.seed, "base 64-bit seed (default 1729)");
    cmd->add_option("--threads", c.threads, "worker count hint");
    cmd->add_option("--out", c.out_path, "output file (default stdout)");
    cmd->add_flag("--no-timestamp", c.no_timestamp, "omit the timestamp field");
    cmd->add_option("--format", c.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

void emit_json(json report, const CommonFlags& c) {
    if (!c.no_timestamp) report["timestamp"] = utc_now();
    emit(report.dump(2) + "\n", c.out_path);
}

int cmd_synth(const std::string& instance_spec, const std::string& rule_spec,
              const std::string& f_json, bool do_prune, int n_cap, int bit_cap,
              bool compact, bool allow_empty_f, const CommonFlags& c) {
    frc_instance* inst = load_instance(instance_spec);
    frc_rule* rule = load_rule(rule_spec, inst, f_json);
    json opts{{"prune", do_prune},
              {"compact_colors", compact},
              {"allow_empty_f", allow_empty_f}};
    if (n_cap > 0) opts["n_cap"] = n_cap;
    if (bit_cap > 0) opts["bit_cap"] = bit_cap;
    char* rep_text = nullptr;
    check(frc_synth(inst, rule, f_json.c_str(), opts.dump().c_str(), &rep_text));
    json report = json::parse(take(rep_text));
    bool verified = report.at("verified").get<bool>();
    emit_json(std::move(report), c);
    frc_rule_free(rule);
    frc_instance_free(inst);
    return verified ? 0 : 1;
}

int cmd_oracle(const std::string& graph_spec, const std::string& instance_spec,
               const std::string& f_json, int k_max, int vertex_cap, const CommonFlags& c) {
    frc_graph* g = nullptr;
    if (!graph_spec.empty()) {
        g = load_graph(graph_spec);
    } else if (!instance_spec.empty()) {
        frc_instance* inst = load_instance(instance_spec);
        check(frc_graph_of_instance(inst, f_json.c_str(), &g));
        frc_instance_free(inst);
    } else {
        die("oracle needs --graph or --instance");
    }
    json opts{{"k_max", k_max}};
    if (vertex_cap > 0) opts["vertex_cap"] = vertex_cap;
    char* rep_text = nullptr;
    check(frc_oracle(g, opts.dump().c_str(), &rep_text));
    emit_json(json::parse(take(rep_text)), c);
    frc_graph_free(g);
    return 0;
}

int cmd_decorate(const std::string& graph_spec, bool full, int n_gens, const CommonFlags& c) {
    frc_graph* g = load_graph(graph_spec);
    json opts{{"full", full}};
    if (n_gens > 0) opts["n_gens"] = n_gens;
    char* rep_text = nullptr;
    check(frc_decorate(g, opts.dump().c_str(), &rep_text));
    json report = json::parse(take(rep_text));
    bool achieved_full = report.at("full").get<bool>();
    emit_json(std::move(report), c);
    frc_graph_free(g);
    return (full && !achieved_full) ? 1 : 0;
}

int cmd_density(const std::vector<std::string>& rule_specs,
                const std::vector<std::string>& graph_specs, const std::string& f_json,
                long samples, int rounds, int runs, const CommonFlags& c) {
    std::ostringstream csv;
    if (!c.no_timestamp) csv << "# generated " << utc_now() << "\n";
    csv << "rule-id,instance-id,d,samples,mean,stderr,rv_reference,engine_ratio_inverse\n";
    csv.setf(std::ios::fixed);
    csv.precision(6);

    for (const auto& spec : rule_specs) {
        // rule spec: "hashmax:free:N:RADIUS", "hashmax:torus:D:M:RADIUS",
        // "file:path", or a bare path
        auto parts = split(spec, ':');
        frc_rule* rule = nullptr;
        std::string rule_id = spec;
        if (parts.size() >= 2 && parts[0] == "hashmax") {
            json ctx;
            int radius = 0;
            if (parts.size() == 4 && parts[1] == "free") {
                ctx = json{{"kind", "free"}, {"n", to_int(parts[2], "rank")}};
                radius = to_int(parts[3], "radius");
            } else if (parts.size() == 5 && parts[1] == "torus") {
                ctx = json{{"kind", "torus"},
                           {"d", to_int(parts[2], "dimension")},
                           {"m", to_int(parts[3], "modulus")}};
                radius = to_int(parts[4], "radius");
            } else {
                die("bad hashmax spec: " + spec);
            }
            check(frc_rule_hashmax(ctx.dump().c_str(), f_json.c_str(), radius, &rule));
        } else {
            std::string path = (parts.size() == 2 && parts[0] == "file") ? parts[1] : spec;
            check(frc_rule_parse(slurp(path).c_str(), &rule));
        }
        char* rule_text = nullptr;
        check(frc_rule_to_json(rule, &rule_text));
        std::string rule_json = take(rule_text);
        int d = degree_of(rule_json, f_json);
        char* est_text = nullptr;
        check(frc_rule_estimate_density(rule, samples, c.seed, &est_text));
        json est = json::parse(take(est_text));
        csv << rule_id << "," << json::parse(rule_json).at("ctx").at("kind").get<std::string>()
            << "," << d << "," << samples << "," << est.at("mean").get<double>() << ","
            << est.at("std_error").get<double>() << ",";
        if (d >= 3) csv << std::log((double)d) / d;
        csv << "," << csv_field(est, "exact_density") << "\n";
        frc_rule_free(rule);
    }

    for (const auto& spec : graph_specs) {
        frc_graph* g = load_graph(spec);
        for (int run = 0; run < runs; ++run) {
            char* rep_text = nullptr;
            check(frc_graph_multiround(g, rounds, c.seed + (std::uint64_t)run, &rep_text));
            json rep = json::parse(take(rep_text));
            int d = rep.at("degree").get<int>();
            csv << "multiround:" << rounds << "," << spec << "," << d << ",1,"
                << rep.at("density").get<double>() << "," << 0.0 << ",";
            if (!rep.at("rv_reference").is_null()) csv << rep.at("rv_reference").get<double>();
            csv << ",\n";
        }
        frc_graph_free(g);
    }
    emit(csv.str(), c.out_path);
    return 0;
}

int cmd_minimize(const std::string& rule_spec, const CommonFlags& c) {
    frc_rule* rule = load_rule(rule_spec, nullptr, "\"std\"");
    frc_rule* small = nullptr;
    check(frc_rule_minimize(rule, &small));
    char* text = nullptr;
    check(frc_rule_to_json(small, &text));
    emit(take(text) + "\n", c.out_path);
    frc_rule_free(small);
    frc_rule_free(rule);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-fold colorings of Schreier graphs from clopen local rules"};
    app.require_subcommand(1);

    CommonFlags cf_synth, cf_oracle, cf_decorate, cf_density, cf_min;

    auto* synth = app.add_subcommand("synth", "synthesize and verify a k-fold coloring");
    std::string s_instance, s_rule, s_f = "\"std\"";
    bool s_prune = false, s_compact = false, s_empty_f = false;
    int s_ncap = 0, s_bitcap = 0;
    synth->add_option("--instance", s_instance, "torus:d:m, file:path, or decoration:path")
        ->required();
    synth->add_option("--rule", s_rule, "file:path or hashmax:RADIUS")->required();
    synth->add_option("--F", s_f, "window JSON, e.g. \"[1]\" or \"std\"");
    synth->add_flag("--prune", s_prune, "prune the rule against F first");
    synth->add_option("--n-cap", s_ncap, "palette cap (default 22)");
    synth->add_option("--bit-cap", s_bitcap, "window enumeration cap (default 24)");
    synth->add_flag("--compact-colors", s_compact, "use only the colors greedy needed");
    synth->add_flag("--allow-empty-F", s_empty_f, "permit an empty F window");
    add_common(synth, cf_synth);

    auto* oracle = app.add_subcommand("oracle", "exact chi*, alpha and k-fold table");
    std::string o_graph, o_instance, o_f = "\"std\"";
    int o_kmax = 2, o_cap = 0;
    oracle->add_option("--graph", o_graph, "cycle:n, complete:n, petersen, random:n:V:seed, or edge-list file");
    oracle->add_option("--instance", o_instance, "instance spec; graph derived via --F");
    oracle->add_option("--F", o_f, "window JSON for --instance");
    oracle->add_option("--k-max", o_kmax, "largest fold in the chi^k table");
    oracle->add_option("--vertex-cap", o_cap, "LP vertex cap (default 30)");
    add_common(oracle, cf_oracle);

    auto* decorate = app.add_subcommand("decorate", "per-generator edge orientation maps");
    std::string d_graph;
    bool d_full = false;
    int d_ngens = 0;
    decorate->add_option("--graph", d_graph, "graph spec")->required();
    decorate->add_flag("--full", d_full, "require total permutations (2n-regular input)");
    decorate->add_option("--n-gens", d_ngens, "generator count (default degree/2)");
    add_common(decorate, cf_decorate);

    auto* density = app.add_subcommand("density", "density experiment CSV");
    std::vector<std::string> y_rules, y_graphs;
    std::string y_f = "\"std\"";
    long y_samples = 100000;
    int y_rounds = 1, y_runs = 1;
    density->add_option("--rule", y_rules, "hashmax:free:N:R, hashmax:torus:D:M:R, or file:path");
    density->add_option("--multiround", y_graphs, "graph spec for the greedy baseline");
    density->add_option("--F", y_f, "window JSON for hashmax rules");
    density->add_option("--samples", y_samples, "Monte Carlo samples per rule");
    density->add_option("--rounds", y_rounds, "greedy rounds per run");
    density->add_option("--runs", y_runs, "greedy runs (seeds seed..seed+runs-1)");
    add_common(density, cf_density);

    auto* minimize = app.add_subcommand("minimize-window", "drop irrelevant rule coordinates");
    std::string m_rule;
    minimize->add_option("--rule", m_rule, "file:path")->required();
    add_common(minimize, cf_min);

    CLI11_PARSE(app, argc, argv);

    if (synth->parsed())
        return cmd_synth(s_instance, s_rule, s_f, s_prune, s_ncap, s_bitcap, s_compact,
                         s_empty_f, cf_synth);
    if (oracle->parsed()) return cmd_oracle(o_graph, o_instance, o_f, o_kmax, o_cap, cf_oracle);
    if (decorate->parsed()) return cmd_decorate(d_graph, d_full, d_ngens, cf_decorate);
    if (density->parsed())
        return cmd_density(y_rules, y_graphs, y_f, y_samples, y_rounds, y_runs, cf_density);
    if (minimize->parsed()) return cmd_minimize(m_rule, cf_min);
    return 2;
}

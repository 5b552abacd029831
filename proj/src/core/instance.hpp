#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

namespace frc {

// Simple undirected graph as a sorted edge list (u < v). Multigraphs are
// flagged explicitly; parallel edges are then distinguished by position.
struct GraphInstance {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    bool multigraph = false;

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    // -1 when the graph is not regular.
    int regular_degree() const;
    bool has_edge(int u, int v) const;

    static GraphInstance of(int vertex_count, std::vector<std::pair<int, int>> edges,
                            bool multigraph = false);
};

GraphInstance cycle_graph(int n);
GraphInstance complete_graph(int n);
GraphInstance petersen_graph();

// Finite Schreier instance: per-generator partial injections on vertex
// indices. -1 marks "undefined". Group elements act by composing the maps,
// letters applied right to left so that eval(a*b, x) = eval(a, eval(b, x)).
struct SchreierInstance {
    GroupCtx ctx;
    int vertex_count = 0;
    std::vector<std::vector<int>> gen_maps; // one per generator, size vertex_count
    std::vector<std::vector<int>> inv_maps; // derived
    std::uint64_t seed = 0;
    std::string provenance;

    // Signed generator step; i in [1, rank] applies gen i, negative its inverse.
    int step(int signed_gen, int v) const;
    // Full element action; -1 when any intermediate step is undefined.
    int eval(const GroupElement& g, int v) const;

    static SchreierInstance of(GroupCtx ctx, int vertex_count,
                               std::vector<std::vector<int>> gen_maps);
};

// Cayley-type instance of (Z_m)^d acting on itself; generator i translates
// coordinate i by one. Free for m > 2.
SchreierInstance torus_instance(int d, int m);

bool is_free_up_to_radius(const SchreierInstance& S, int radius);

// Configuration model with whole-resample rejection of loops and parallel
// edges; deterministic in the seed.
GraphInstance random_regular(int n_gens, int vertices, std::uint64_t seed,
                             int max_attempts = 200000);

// Edges {x, g.x} for g in F union F^-1, where defined and not a fixed point.
GraphInstance schreier_graph(const SchreierInstance& S, const Window& F);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const GraphInstance& G);

} // namespace frc

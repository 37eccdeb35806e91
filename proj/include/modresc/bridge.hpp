#pragma once

#include <cstddef>
#include <vector>

#include "modresc/bigraph.hpp"
#include "modresc/bitvec.hpp"

namespace modresc {

// Simple undirected graph. When produced by saturate(), vertices 0..n_left-1
// are the left class of the source bipartite graph and the rest the right
// class.
struct GeneralGraph {
    std::size_t vertex_count = 0;
    std::size_t n_left = 0;
    std::vector<BitVec> adj;

    GeneralGraph() = default;
    explicit GeneralGraph(std::size_t n, std::size_t n_left_class = 0)
        : vertex_count(n), n_left(n_left_class), adj(n, BitVec(n)) {}

    bool has_edge(std::size_t u, std::size_t v) const { return adj[u].test(v); }
    void add_edge(std::size_t u, std::size_t v) {
        adj[u].set(v);
        adj[v].set(u);
    }
    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj) twice += nb.count();
        return twice / 2;
    }
};

struct CliqueCover {
    std::vector<BitVec> cliques;

    std::size_t size() const { return cliques.size(); }
};

// True iff every pair inside the set is an edge.
bool is_clique(const GeneralGraph& g, const BitVec& vs);

// Adds every intra-class pair to the bipartite graph: both classes become
// cliques, cross edges stay as they are. Left vertex u maps to u, right
// vertex v to n_left + v.
GeneralGraph saturate(const BipartiteGraph& gprime);

// {V(B_1), ..., V(B_k), V_1, V_2}: each biclique's vertex set plus the two
// class cliques, k+2 sets covering every edge of saturate(gprime). Throws
// contract_error if the cover is not valid on gprime.
CliqueCover biclique_to_clique_cover(const BicliqueCover& cover, const BipartiteGraph& gprime);

// Cliques meeting both classes become (left members) x (right members);
// one-sided cliques are dropped; the result is deduplicated. Requires that
// gprime has no vertex adjacent to its whole opposite class (the full-degree
// reduction rule must have been applied) and that every clique is complete
// in saturate(gprime); throws contract_error otherwise.
BicliqueCover clique_to_biclique_cover(const CliqueCover& cliques, const BipartiteGraph& gprime);

} // namespace modresc

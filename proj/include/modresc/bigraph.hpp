#pragma once

#include <cstddef>
#include <vector>

#include "modresc/bitvec.hpp"
#include "modresc/boolmat.hpp"

namespace modresc {

// Bipartite graph on left vertices 0..n-1 and right vertices 0..m-1, stored
// as neighborhood bit sets on both sides (kept mutually consistent).
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t n_left, std::size_t n_right)
        : left_(n_left, BitVec(n_right)), right_(n_right, BitVec(n_left)) {}

    std::size_t n_left() const { return left_.size(); }
    std::size_t n_right() const { return right_.size(); }

    bool has_edge(std::size_t u, std::size_t v) const { return left_[u].test(v); }
    void add_edge(std::size_t u, std::size_t v) {
        left_[u].set(v);
        right_[v].set(u);
    }
    void remove_edge(std::size_t u, std::size_t v) {
        left_[u].reset(v);
        right_[v].reset(u);
    }

    const BitVec& left_nbrs(std::size_t u) const { return left_[u]; }
    const BitVec& right_nbrs(std::size_t v) const { return right_[v]; }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& nb : left_) c += nb.count();
        return c;
    }

    bool operator==(const BipartiteGraph& o) const { return left_ == o.left_; }

private:
    std::vector<BitVec> left_;
    std::vector<BitVec> right_;
};

// Complete bipartite subgraph given by vertex sets on each side.
struct Biclique {
    BitVec left;
    BitVec right;

    bool operator==(const Biclique& o) const { return left == o.left && right == o.right; }
};

using BicliqueCover = std::vector<Biclique>;

// Orders bicliques by (left, right) under sorted-index-sequence comparison.
bool biclique_less(const Biclique& a, const Biclique& b);

// Sorts a cover and drops duplicate bicliques.
void canonicalize_cover(BicliqueCover& cover);

// G has edge (i, j) iff C[i][j] = 1.
BipartiteGraph from_biadjacency(const BoolMatrix& C);
BoolMatrix to_biadjacency(const BipartiteGraph& g);

// Both sides nonempty and every left-right pair is an edge.
bool is_biclique(const BipartiteGraph& g, const Biclique& b);

// Every edge of g lies in some biclique of the cover and every biclique is a
// biclique of g.
bool covers(const BipartiteGraph& g, const BicliqueCover& cover);

// Width-k factorization from a k-biclique cover of the graph of C:
// M[i][l] = 1 iff left i is in biclique l, R[j][l] = 0 iff right j is in
// biclique l.
ModRescPair cover_to_matrices(const BoolMatrix& C, const BicliqueCover& cover);

// Biclique cover of the graph of M otimes R read off the factorization;
// bicliques with an empty side are dropped.
BicliqueCover matrices_to_cover(const ModRescPair& mr);

} // namespace modresc

#include "modresc/bigraph.hpp"

#include <algorithm>

#include "modresc/errors.hpp"

namespace modresc {

bool biclique_less(const Biclique& a, const Biclique& b) {
    int c = BitVec::set_compare(a.left, b.left);
    if (c != 0) return c < 0;
    return BitVec::set_compare(a.right, b.right) < 0;
}

void canonicalize_cover(BicliqueCover& cover) {
    std::sort(cover.begin(), cover.end(), biclique_less);
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
}

BipartiteGraph from_biadjacency(const BoolMatrix& C) {
    BipartiteGraph g(C.rows(), C.cols());
    for (std::size_t i = 0; i < C.rows(); ++i)
        C.row(i).for_each([&](std::size_t j) { g.add_edge(i, j); });
    return g;
}

BoolMatrix to_biadjacency(const BipartiteGraph& g) {
    BoolMatrix C(g.n_left(), g.n_right());
    for (std::size_t u = 0; u < g.n_left(); ++u)
        g.left_nbrs(u).for_each([&](std::size_t v) { C.set(u, v, true); });
    return C;
}

bool is_biclique(const BipartiteGraph& g, const Biclique& b) {
    if (b.left.none() || b.right.none()) return false;
    bool ok = true;
    b.left.for_each([&](std::size_t u) {
        if (!b.right.is_subset_of(g.left_nbrs(u))) ok = false;
    });
    return ok;
}

bool covers(const BipartiteGraph& g, const BicliqueCover& cover) {
    for (const auto& b : cover)
        if (!is_biclique(g, b)) return false;
    BipartiteGraph seen(g.n_left(), g.n_right());
    for (const auto& b : cover)
        b.left.for_each([&](std::size_t u) {
            b.right.for_each([&](std::size_t v) { seen.add_edge(u, v); });
        });
    return seen == g;
}

ModRescPair cover_to_matrices(const BoolMatrix& C, const BicliqueCover& cover) {
    std::size_t n = C.rows(), m = C.cols(), k = cover.size();
    BoolMatrix M(n, k);
    BoolMatrix R(m, k);
    for (std::size_t j = 0; j < m; ++j) R.row(j).set_all();
    for (std::size_t l = 0; l < k; ++l) {
        cover[l].left.for_each([&](std::size_t i) { M.set(i, l, true); });
        cover[l].right.for_each([&](std::size_t j) { R.set(j, l, false); });
    }
    return {std::move(M), std::move(R)};
}

BicliqueCover matrices_to_cover(const ModRescPair& mr) {
    if (mr.M.cols() != mr.R.cols())
        throw contract_error("matrices_to_cover: column count mismatch");
    std::size_t k = mr.M.cols();
    BicliqueCover cover;
    for (std::size_t l = 0; l < k; ++l) {
        Biclique b{BitVec(mr.M.rows()), BitVec(mr.R.rows())};
        for (std::size_t i = 0; i < mr.M.rows(); ++i)
            if (mr.M.get(i, l)) b.left.set(i);
        for (std::size_t j = 0; j < mr.R.rows(); ++j)
            if (!mr.R.get(j, l)) b.right.set(j);
        if (b.left.any() && b.right.any()) cover.push_back(std::move(b));
    }
    return cover;
}

} // namespace modresc

#include "modresc/bridge.hpp"

#include <string>

#include "modresc/errors.hpp"

namespace modresc {

bool is_clique(const GeneralGraph& g, const BitVec& vs) {
    bool ok = true;
    vs.for_each([&](std::size_t u) {
        BitVec rest = vs;
        rest.reset(u);
        if (!rest.is_subset_of(g.adj[u])) ok = false;
    });
    return ok;
}

GeneralGraph saturate(const BipartiteGraph& gprime) {
    std::size_t n = gprime.n_left(), m = gprime.n_right();
    GeneralGraph g(n + m, n);
    for (std::size_t u = 0; u < n; ++u)
        gprime.left_nbrs(u).for_each([&](std::size_t v) { g.add_edge(u, n + v); });
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) g.add_edge(n + a, n + b);
    return g;
}

CliqueCover biclique_to_clique_cover(const BicliqueCover& cover, const BipartiteGraph& gprime) {
    if (!covers(gprime, cover))
        throw contract_error("biclique_to_clique_cover: cover is not valid on the bipartite graph");
    std::size_t n = gprime.n_left(), m = gprime.n_right();
    CliqueCover out;
    out.cliques.reserve(cover.size() + 2);
    for (const auto& b : cover) {
        BitVec vs(n + m);
        b.left.for_each([&](std::size_t u) { vs.set(u); });
        b.right.for_each([&](std::size_t v) { vs.set(n + v); });
        out.cliques.push_back(std::move(vs));
    }
    BitVec v1(n + m), v2(n + m);
    for (std::size_t u = 0; u < n; ++u) v1.set(u);
    for (std::size_t v = 0; v < m; ++v) v2.set(n + v);
    out.cliques.push_back(std::move(v1));
    out.cliques.push_back(std::move(v2));
    return out;
}

BicliqueCover clique_to_biclique_cover(const CliqueCover& cliques, const BipartiteGraph& gprime) {
    std::size_t n = gprime.n_left(), m = gprime.n_right();
    for (std::size_t u = 0; u < n; ++u)
        if (m > 0 && gprime.left_nbrs(u).count() == m)
            throw contract_error("clique_to_biclique_cover: left vertex " + std::to_string(u) +
                                 " is adjacent to the whole right class");
    for (std::size_t v = 0; v < m; ++v)
        if (n > 0 && gprime.right_nbrs(v).count() == n)
            throw contract_error("clique_to_biclique_cover: right vertex " + std::to_string(v) +
                                 " is adjacent to the whole left class");

    GeneralGraph sat = saturate(gprime);
    BicliqueCover out;
    for (const BitVec& k : cliques.cliques) {
        if (!is_clique(sat, k))
            throw contract_error("clique_to_biclique_cover: set is not a clique of the saturated graph");
        Biclique b{BitVec(n), BitVec(m)};
        k.for_each([&](std::size_t x) {
            if (x < n) b.left.set(x); else b.right.set(x - n);
        });
        if (b.left.any() && b.right.any()) out.push_back(std::move(b));
    }
    canonicalize_cover(out);
    return out;
}

} // namespace modresc

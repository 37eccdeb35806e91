#include "modresc/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace modresc {

std::vector<Biclique> maximal_bicliques(const BipartiteGraph& g) {
    std::size_t n = g.n_left();

    std::vector<BitVec> generators;
    std::unordered_set<BitVec, BitVecHash> seen;
    for (std::size_t u = 0; u < n; ++u) {
        const BitVec& nb = g.left_nbrs(u);
        if (nb.any() && seen.insert(nb).second) generators.push_back(nb);
    }

    // Close the generator set under pairwise intersection; each member is the
    // right side of exactly one maximal biclique.
    std::vector<BitVec> work = generators;
    for (std::size_t i = 0; i < work.size(); ++i)
        for (const BitVec& gen : generators) {
            BitVec t = work[i] & gen;
            if (t.any() && seen.insert(t).second) work.push_back(t);
        }

    std::vector<Biclique> out;
    out.reserve(work.size());
    for (BitVec& right : work) {
        BitVec left(n);
        for (std::size_t u = 0; u < n; ++u)
            if (right.is_subset_of(g.left_nbrs(u))) left.set(u);
        out.push_back({std::move(left), std::move(right)});
    }
    std::sort(out.begin(), out.end(), biclique_less);
    return out;
}

bool count_bound_check(const BipartiteGraph& g) {
    std::size_t count = maximal_bicliques(g).size();
    std::size_t e = (g.n_left() + g.n_right() + 1) / 2;
    if (e >= 63) return true;
    return count <= (std::size_t{1} << e);
}

} // namespace modresc

#include "modresc/solve.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <utility>

#include "modresc/enumerate.hpp"
#include "modresc/errors.hpp"
#include "modresc/kernel.hpp"

namespace modresc {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

std::vector<Edge> edge_list(const BipartiteGraph& g) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < g.n_left(); ++u)
        g.left_nbrs(u).for_each([&](std::size_t v) { edges.emplace_back(u, v); });
    return edges;
}

// Two edges can lie in a common biclique iff the two cross pairs they induce
// are both edges.
bool co_coverable(const BipartiteGraph& g, const Edge& e, const Edge& f) {
    return g.has_edge(e.first, f.second) && g.has_edge(f.first, e.second);
}

// Greedy set of pairwise non-co-coverable edges; its size is a lower bound
// on any biclique cover.
std::vector<Edge> greedy_fooling_set(const BipartiteGraph& g, const std::vector<Edge>& edges) {
    std::vector<Edge> fs;
    for (const Edge& e : edges) {
        bool independent = true;
        for (const Edge& f : fs)
            if (co_coverable(g, e, f)) {
                independent = false;
                break;
            }
        if (independent) fs.push_back(e);
    }
    return fs;
}

// Edge-id geometry plus per-biclique coverage masks, shared by the subset
// and branch searches.
struct CoverageIndex {
    std::vector<Edge> edges;
    std::vector<Biclique> bicliques;
    std::vector<BitVec> masks; // masks[t] = edge ids covered by bicliques[t]
    BitVec all_edges;

    CoverageIndex(const BipartiteGraph& g, std::vector<Biclique> K)
        : edges(edge_list(g)), bicliques(std::move(K)), all_edges(edges.size()) {
        std::vector<std::size_t> id(g.n_left() * g.n_right(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            id[edges[e].first * g.n_right() + edges[e].second] = e;
        all_edges.set_all();
        masks.reserve(bicliques.size());
        for (const auto& b : bicliques) {
            BitVec mask(edges.size());
            b.left.for_each([&](std::size_t u) {
                b.right.for_each([&](std::size_t v) { mask.set(id[u * g.n_right() + v]); });
            });
            masks.push_back(std::move(mask));
        }
    }
};

} // namespace

std::optional<BicliqueCover> solve_partition(const BipartiteGraph& g, std::size_t k,
                                             SolveStats* stats) {
    std::vector<Edge> edges = edge_list(g);
    if (edges.empty()) return BicliqueCover{};
    if (k == 0) return std::nullopt;
    k = std::min(k, edges.size()); // singleton blocks suffice beyond that

    // Front-load a fooling set: its edges pairwise refuse to share a block,
    // so infeasible budgets die near the root.
    std::vector<Edge> fs = greedy_fooling_set(g, edges);
    if (fs.size() > k) return std::nullopt;
    {
        std::vector<Edge> rest;
        for (const Edge& e : edges)
            if (std::find(fs.begin(), fs.end(), e) == fs.end()) rest.push_back(e);
        edges = fs;
        edges.insert(edges.end(), rest.begin(), rest.end());
    }

    std::vector<BitVec> U(k, BitVec(g.n_left()));
    std::vector<BitVec> W(k, BitVec(g.n_right()));
    std::optional<BicliqueCover> result;

    // Restricted growth: edge i may join blocks 0..used-1 or open block
    // `used`; a block stays acceptable iff its touched-vertex closure
    // U[b] x W[b] lies inside the edge set.
    auto dfs = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
        if (stats) ++stats->nodes;
        if (i == edges.size()) {
            if (stats) ++stats->partitions;
            BicliqueCover cover;
            for (std::size_t b = 0; b < used; ++b) cover.push_back({U[b], W[b]});
            result = std::move(cover);
            return true;
        }
        auto [u, v] = edges[i];
        std::size_t limit = std::min(used + 1, k);
        for (std::size_t b = 0; b < limit; ++b) {
            bool new_u = !U[b].test(u), new_v = !W[b].test(v);
            U[b].set(u);
            W[b].set(v);
            bool closed = W[b].is_subset_of(g.left_nbrs(u)) && U[b].is_subset_of(g.right_nbrs(v));
            if (closed && self(self, i + 1, b == used ? used + 1 : used)) return true;
            if (new_u) U[b].reset(u);
            if (new_v) W[b].reset(v);
        }
        return false;
    };
    dfs(dfs, 0, 0);
    return result;
}

std::optional<BicliqueCover> solve_subsets(const BipartiteGraph& g, std::size_t k,
                                           SolveStats* stats) {
    CoverageIndex ix(g, maximal_bicliques(g));
    if (ix.edges.empty()) return BicliqueCover{};
    if (k == 0) return std::nullopt;

    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t start, std::size_t left, const BitVec& acc) -> bool {
        if (stats) ++stats->nodes;
        if (left == 0) return acc == ix.all_edges;
        for (std::size_t t = start; t + left <= ix.bicliques.size(); ++t) {
            chosen.push_back(t);
            if (self(self, t + 1, left - 1, acc | ix.masks[t])) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t j = 1; j <= std::min(k, ix.bicliques.size()); ++j) {
        chosen.clear();
        if (rec(rec, 0, j, BitVec(ix.edges.size()))) {
            BicliqueCover cover;
            for (std::size_t t : chosen) cover.push_back(ix.bicliques[t]);
            return cover;
        }
    }
    return std::nullopt;
}

std::optional<BicliqueCover> solve_branch(const BipartiteGraph& g, std::size_t k,
                                          SolveStats* stats) {
    CoverageIndex ix(g, maximal_bicliques(g));
    if (ix.edges.empty()) return BicliqueCover{};
    if (k == 0) return std::nullopt;
    k = std::min(k, ix.edges.size()); // no minimal cover is larger

    std::vector<std::vector<std::size_t>> containing(ix.edges.size());
    std::size_t max_cov = 0;
    for (std::size_t t = 0; t < ix.bicliques.size(); ++t) {
        max_cov = std::max(max_cov, ix.masks[t].count());
        ix.masks[t].for_each([&](std::size_t e) { containing[e].push_back(t); });
    }

    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, const BitVec& uncovered, std::size_t budget) -> bool {
        if (stats) ++stats->nodes;
        if (uncovered.none()) return true;
        if (budget == 0 || uncovered.count() > budget * max_cov) return false;

        // Branch on the most constrained uncovered edge.
        std::size_t pick = 0, best = static_cast<std::size_t>(-1);
        uncovered.for_each([&](std::size_t e) {
            if (containing[e].size() < best) {
                best = containing[e].size();
                pick = e;
            }
        });

        // Children ordered by how much of the remaining edge set they cover.
        std::vector<std::pair<std::size_t, std::size_t>> order;
        order.reserve(containing[pick].size());
        for (std::size_t t : containing[pick])
            order.emplace_back((ix.masks[t] & uncovered).count(), t);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });

        for (const auto& [gain, t] : order) {
            (void)gain;
            BitVec next = uncovered;
            next.andnot_assign(ix.masks[t]);
            chosen.push_back(t);
            if (self(self, next, budget - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    if (!dfs(dfs, ix.all_edges, k)) return std::nullopt;
    BicliqueCover cover;
    for (std::size_t t : chosen) cover.push_back(ix.bicliques[t]);
    return cover;
}

namespace {

BicliqueCover greedy_cover(const CoverageIndex& ix, SolveStats*) {
    BicliqueCover cover;
    BitVec uncovered = ix.all_edges;
    while (uncovered.any()) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t t = 0; t < ix.bicliques.size(); ++t) {
            std::size_t gain = (ix.masks[t] & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = t;
            }
        }
        cover.push_back(ix.bicliques[best]);
        uncovered.andnot_assign(ix.masks[best]);
    }
    return cover;
}

CoverSolution finish_infeasible(SolveStats stats,
                                std::chrono::steady_clock::time_point t0) {
    CoverSolution sol;
    sol.feasible = false;
    stats.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    sol.stats = stats;
    return sol;
}

} // namespace

CoverSolution min_cover(const BipartiteGraph& g, const SolverConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    SolveStats stats;

    const BipartiteGraph* work = &g;
    KernelResult kr;
    if (config.use_kernelization) {
        kr = kernelize(g, config.max_k);
        stats.kernel_offset = kr.parameter_offset;
        if (kr.verdict == KernelVerdict::RejectedBySizeBound)
            return finish_infeasible(stats, t0);
        work = &kr.kernel;
    }
    std::size_t offset = stats.kernel_offset;

    std::optional<std::size_t> cap; // budget left for the working graph
    if (config.max_k) {
        if (*config.max_k < offset) return finish_infeasible(stats, t0);
        cap = *config.max_k - offset;
    }

    auto probe = [&](std::size_t kk) -> std::optional<BicliqueCover> {
        switch (config.algorithm) {
        case Algorithm::partition: return solve_partition(*work, kk, &stats);
        case Algorithm::subsets: return solve_subsets(*work, kk, &stats);
        case Algorithm::branch: return solve_branch(*work, kk, &stats);
        }
        return std::nullopt;
    };

    BicliqueCover kernel_cover;
    bool solved = false;
    if (work->edge_count() == 0) {
        solved = true;
    } else {
        CoverageIndex ix(*work, maximal_bicliques(*work));
        BicliqueCover greedy = greedy_cover(ix, &stats);
        std::size_t ub = greedy.size();
        std::size_t lb = std::max<std::size_t>(greedy_fooling_set(*work, ix.edges).size(), 1);

        bool anchored = !cap || *cap >= ub; // feasibility known at the top of the bracket
        std::size_t hi = anchored ? ub : *cap;
        if (hi < lb) return finish_infeasible(stats, t0);

        if (config.strategy == SearchStrategy::linear) {
            std::size_t top = anchored ? ub - 1 : hi;
            for (std::size_t kk = lb; kk <= top && !solved; ++kk)
                if (auto c = probe(kk)) {
                    kernel_cover = std::move(*c);
                    solved = true;
                }
            if (!solved && anchored) {
                kernel_cover = std::move(greedy);
                solved = true;
            }
        } else {
            std::size_t lo = lb;
            std::size_t hi2 = hi;
            std::optional<BicliqueCover> found;
            while (lo < hi2) {
                std::size_t mid = lo + (hi2 - lo) / 2;
                if (auto c = probe(mid)) {
                    found = std::move(*c);
                    hi2 = mid;
                } else {
                    lo = mid + 1;
                }
            }
            if (found) {
                kernel_cover = std::move(*found);
                solved = true;
            } else if (anchored) {
                kernel_cover = std::move(greedy);
                solved = true;
            } else if (auto c = probe(lo)) {
                kernel_cover = std::move(*c);
                solved = true;
            }
        }
        if (!solved) return finish_infeasible(stats, t0);
    }

    BicliqueCover cover =
        config.use_kernelization ? lift(kernel_cover, kr) : std::move(kernel_cover);
    canonicalize_cover(cover);
    if (!covers(g, cover))
        throw contract_error("min_cover: produced cover fails validation");

    CoverSolution sol;
    sol.feasible = true;
    sol.k = cover.size();
    BoolMatrix C = to_biadjacency(g);
    sol.pair = cover_to_matrices(C, cover);
    if (!verify_solution(C, sol.pair))
        throw contract_error("min_cover: factorization fails verification");
    sol.cover = std::move(cover);
    stats.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    sol.stats = stats;
    return sol;
}

CoverSolution solve_modresc(const BoolMatrix& c, const SolverConfig& config) {
    return min_cover(from_biadjacency(c), config);
}

PlantedInstance generate_planted(std::size_t n, std::size_t m, std::size_t k_star,
                                 double left_density, double right_density,
                                 std::uint64_t seed) {
    if (!(left_density >= 0.0 && left_density <= 1.0))
        throw input_error("generate_planted: left density must be in [0, 1]");
    if (!(right_density >= 0.0 && right_density <= 1.0))
        throw input_error("generate_planted: right density must be in [0, 1]");

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    BoolMatrix M(n, k_star);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k_star; ++l)
            if (uniform() < left_density) M.set(i, l, true);
    BoolMatrix R(m, k_star);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < k_star; ++l)
            if (!(uniform() < right_density)) R.set(j, l, true);

    PlantedInstance out;
    out.C = mat_otimes(M, R);
    out.pair = {std::move(M), std::move(R)};
    return out;
}

} // namespace modresc

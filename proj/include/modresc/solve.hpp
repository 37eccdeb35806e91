#pragma once

#include <cstdint>
#include <optional>

#include "modresc/bigraph.hpp"
#include "modresc/boolmat.hpp"

namespace modresc {

enum class Algorithm { partition, subsets, branch };
enum class SearchStrategy { linear, dichotomy };

struct SolverConfig {
    Algorithm algorithm = Algorithm::branch;
    std::optional<std::size_t> max_k;
    bool deterministic = true;
    std::uint64_t seed = 0;
    SearchStrategy strategy = SearchStrategy::dichotomy;
    bool use_kernelization = true;
};

struct SolveStats {
    std::uint64_t nodes = 0;      // search tree nodes across all feasibility calls
    std::uint64_t partitions = 0; // complete edge partitions tested
    std::size_t kernel_offset = 0;
    double wall_ms = 0.0;
};

struct CoverSolution {
    bool feasible = false; // false only when max_k is exhausted first
    std::size_t k = 0;
    BicliqueCover cover;
    ModRescPair pair;
    SolveStats stats;
};

// Each decision procedure answers: does g have a biclique cover of size
// <= k? On success the witness cover (possibly smaller than k) is returned.
// All three are exact and agree; they differ only in search shape. Callers
// pass an already-kernelized graph; none of them re-kernelizes.

// Partitions the edge set into at most k blocks (restricted growth search),
// pruning any block whose touched-vertex closure U x W leaves the edge set.
std::optional<BicliqueCover> solve_partition(const BipartiteGraph& g, std::size_t k,
                                             SolveStats* stats = nullptr);

// Tries subsets of the maximal bicliques in ascending size order.
std::optional<BicliqueCover> solve_subsets(const BipartiteGraph& g, std::size_t k,
                                           SolveStats* stats = nullptr);

// Branches on the uncovered edge contained in the fewest maximal bicliques.
std::optional<BicliqueCover> solve_branch(const BipartiteGraph& g, std::size_t k,
                                          SolveStats* stats = nullptr);

// Minimum biclique cover: kernelize, bracket with a greedy cover (upper) and
// a greedy fooling set of pairwise non-co-coverable edges (lower), search the
// bracket with the configured algorithm and strategy, lift back through the
// kernel trace, convert to matrices, verify. k counts bicliques on the
// original graph, kernel offset included.
CoverSolution min_cover(const BipartiteGraph& g, const SolverConfig& config = {});

// Minimum-width factorization C = M (x) R via the cover equivalence.
CoverSolution solve_modresc(const BoolMatrix& c, const SolverConfig& config = {});

struct PlantedInstance {
    BoolMatrix C;
    ModRescPair pair;
};

// Random factorization with k_star columns: M entries are 1 with probability
// left_density, R entries are 0 with probability right_density, C is their
// product. Reproducible from seed. The planted width is an upper bound on
// the optimum, not necessarily the optimum itself.
PlantedInstance generate_planted(std::size_t n, std::size_t m, std::size_t k_star,
                                 double left_density, double right_density, std::uint64_t seed);

} // namespace modresc

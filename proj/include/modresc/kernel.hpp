#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modresc/bigraph.hpp"
#include "modresc/bitvec.hpp"

namespace modresc {

enum class ReductionKind { IsolatedRemoval, TwinMerge, PendantRemoval, FullDegreeRemoval };
enum class Side { Left, Right };

inline constexpr std::size_t no_vertex = static_cast<std::size_t>(-1);

// One rule application. Vertex ids and snapshots are in the coordinates of
// the original graph; snapshots list vertices alive at the event's time.
struct ReductionEvent {
    ReductionKind kind;
    Side side;                    // side of `removed`
    std::size_t removed;          // PendantRemoval: the retained-then-removed neighbor u (star center)
    std::size_t partner = no_vertex;   // PendantRemoval: the degree-1 vertex, opposite side of u
    std::size_t kept_twin = no_vertex; // TwinMerge: the surviving twin (lower index)
    BitVec neighbor_snapshot;     // PendantRemoval: alive neighbors of u; FullDegreeRemoval: alive neighbors of removed
};

enum class KernelVerdict { Reduced, RejectedBySizeBound };

struct KernelResult {
    BipartiteGraph kernel;              // compacted to surviving vertices
    std::vector<std::size_t> left_ids;  // kernel left index -> original left id
    std::vector<std::size_t> right_ids; // kernel right index -> original right id
    std::size_t parameter_offset = 0;   // count of PendantRemoval events, each worth one unit of k
    std::vector<ReductionEvent> trace;  // in application order
    KernelVerdict verdict = KernelVerdict::Reduced;
    std::size_t orig_n_left = 0;
    std::size_t orig_n_right = 0;
};

// Applies the four reduction rules in priority order (isolated, twin,
// pendant, full-degree), rescanning from the first rule after every
// application, until none applies. With a budget, rejects when pendant
// removals exceed it or either kernel side exceeds 2^(budget - offset).
KernelResult kernelize(const BipartiteGraph& g, std::optional<std::size_t> k_budget = std::nullopt);

// Replays the trace in reverse to turn a cover of the kernel into a cover of
// the original graph. Adds parameter_offset bicliques (one star per pendant
// removal), plus one more in the edge case where a full-degree removal left
// an edgeless kernel. Throws contract_error if kernel_cover is not a valid
// cover of the kernel.
BicliqueCover lift(const BicliqueCover& kernel_cover, const KernelResult& kr);

} // namespace modresc

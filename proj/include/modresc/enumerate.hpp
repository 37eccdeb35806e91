#pragma once

#include <vector>

#include "modresc/bigraph.hpp"

namespace modresc {

// All inclusion-wise maximal bicliques with both sides nonempty, in
// canonical order. Every maximal right side is an intersection of left
// neighborhoods, so the closure of {N(u)} under intersection enumerates
// them exactly once.
std::vector<Biclique> maximal_bicliques(const BipartiteGraph& g);

// True iff the number of maximal bicliques is at most 2^ceil((n+m)/2).
bool count_bound_check(const BipartiteGraph& g);

} // namespace modresc

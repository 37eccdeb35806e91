#include "modresc/kernel.hpp"

#include <array>
#include <unordered_map>

#include "modresc/errors.hpp"

namespace modresc {

namespace {

// Mutable view of the shrinking graph. Vertices stay at their original ids;
// removal clears the alive bit and deletes incident edges.
struct Work {
    BipartiteGraph g;
    std::array<BitVec, 2> alive; // [Side::Left], [Side::Right]

    explicit Work(const BipartiteGraph& src) : g(src) {
        alive[0] = BitVec(src.n_left());
        alive[1] = BitVec(src.n_right());
        alive[0].set_all();
        alive[1].set_all();
    }

    static int idx(Side s) { return s == Side::Left ? 0 : 1; }
    static Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

    const BitVec& nbrs(Side s, std::size_t v) const {
        return s == Side::Left ? g.left_nbrs(v) : g.right_nbrs(v);
    }

    void remove(Side s, std::size_t v) {
        auto nb = nbrs(s, v).indices();
        for (std::size_t w : nb)
            s == Side::Left ? g.remove_edge(v, w) : g.remove_edge(w, v);
        alive[idx(s)].reset(v);
    }
};

bool try_isolated(Work& w, std::vector<ReductionEvent>& trace) {
    for (Side s : {Side::Left, Side::Right}) {
        bool fired = false;
        std::size_t hit = 0;
        w.alive[Work::idx(s)].for_each([&](std::size_t v) {
            if (!fired && w.nbrs(s, v).none()) {
                fired = true;
                hit = v;
            }
        });
        if (fired) {
            trace.push_back({ReductionKind::IsolatedRemoval, s, hit, no_vertex, no_vertex, BitVec()});
            w.remove(s, hit);
            return true;
        }
    }
    return false;
}

bool try_twins(Work& w, std::vector<ReductionEvent>& trace) {
    for (Side s : {Side::Left, Side::Right}) {
        std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
        auto ids = w.alive[Work::idx(s)].indices();
        for (std::size_t v : ids) buckets[w.nbrs(s, v).hash()].push_back(v);
        for (std::size_t v : ids) {
            const auto& bucket = buckets[w.nbrs(s, v).hash()];
            for (std::size_t u : bucket) {
                if (u <= v) continue;
                if (w.nbrs(s, u) == w.nbrs(s, v)) {
                    trace.push_back({ReductionKind::TwinMerge, s, u, no_vertex, v, BitVec()});
                    w.remove(s, u);
                    return true;
                }
            }
        }
    }
    return false;
}

bool try_pendant(Work& w, std::vector<ReductionEvent>& trace, std::size_t& offset) {
    for (Side s : {Side::Left, Side::Right}) {
        bool fired = false;
        std::size_t pendant = 0;
        w.alive[Work::idx(s)].for_each([&](std::size_t v) {
            if (!fired && w.nbrs(s, v).count() == 1) {
                fired = true;
                pendant = v;
            }
        });
        if (fired) {
            Side us = Work::opposite(s);
            std::size_t u = static_cast<std::size_t>(w.nbrs(s, pendant).first_set());
            trace.push_back({ReductionKind::PendantRemoval, us, u, pendant, no_vertex, w.nbrs(us, u)});
            w.remove(us, u);
            w.remove(s, pendant);
            ++offset;
            return true;
        }
    }
    return false;
}

bool try_full_degree(Work& w, std::vector<ReductionEvent>& trace) {
    for (Side s : {Side::Left, Side::Right}) {
        const BitVec& opp_alive = w.alive[Work::idx(Work::opposite(s))];
        bool fired = false;
        std::size_t hit = 0;
        w.alive[Work::idx(s)].for_each([&](std::size_t v) {
            if (!fired && w.nbrs(s, v).any() && opp_alive.is_subset_of(w.nbrs(s, v))) {
                fired = true;
                hit = v;
            }
        });
        if (fired) {
            trace.push_back({ReductionKind::FullDegreeRemoval, s, hit, no_vertex, no_vertex, w.nbrs(s, hit)});
            w.remove(s, hit);
            return true;
        }
    }
    return false;
}

} // namespace

KernelResult kernelize(const BipartiteGraph& g, std::optional<std::size_t> k_budget) {
    Work w(g);
    KernelResult res;
    res.orig_n_left = g.n_left();
    res.orig_n_right = g.n_right();

    for (;;) {
        if (try_isolated(w, res.trace)) continue;
        if (try_twins(w, res.trace)) continue;
        if (try_pendant(w, res.trace, res.parameter_offset)) continue;
        if (try_full_degree(w, res.trace)) continue;
        break;
    }

    auto left_alive = w.alive[0].indices();
    auto right_alive = w.alive[1].indices();
    res.left_ids = left_alive;
    res.right_ids = right_alive;
    res.kernel = BipartiteGraph(left_alive.size(), right_alive.size());
    std::vector<std::size_t> right_pos(g.n_right(), no_vertex);
    for (std::size_t j = 0; j < right_alive.size(); ++j) right_pos[right_alive[j]] = j;
    for (std::size_t i = 0; i < left_alive.size(); ++i)
        w.g.left_nbrs(left_alive[i]).for_each([&](std::size_t v) {
            res.kernel.add_edge(i, right_pos[v]);
        });

    if (k_budget) {
        bool reject = res.parameter_offset > *k_budget;
        if (!reject) {
            std::size_t rem = *k_budget - res.parameter_offset;
            if (rem < 62) {
                std::size_t cap = std::size_t{1} << rem;
                reject = left_alive.size() > cap || right_alive.size() > cap;
            }
        }
        if (reject) res.verdict = KernelVerdict::RejectedBySizeBound;
    }
    return res;
}

BicliqueCover lift(const BicliqueCover& kernel_cover, const KernelResult& kr) {
    if (!covers(kr.kernel, kernel_cover))
        throw contract_error("lift: kernel_cover is not a valid cover of the kernel");

    // Re-express the cover in original-graph coordinates.
    BicliqueCover cover;
    cover.reserve(kernel_cover.size());
    for (const auto& b : kernel_cover) {
        Biclique o{BitVec(kr.orig_n_left), BitVec(kr.orig_n_right)};
        b.left.for_each([&](std::size_t i) { o.left.set(kr.left_ids[i]); });
        b.right.for_each([&](std::size_t j) { o.right.set(kr.right_ids[j]); });
        cover.push_back(std::move(o));
    }

    auto side_of = [](Biclique& b, Side s) -> BitVec& {
        return s == Side::Left ? b.left : b.right;
    };

    for (auto it = kr.trace.rbegin(); it != kr.trace.rend(); ++it) {
        const ReductionEvent& e = *it;
        switch (e.kind) {
        case ReductionKind::IsolatedRemoval:
            break;
        case ReductionKind::TwinMerge:
            for (auto& b : cover)
                if (side_of(b, e.side).test(e.kept_twin)) side_of(b, e.side).set(e.removed);
            break;
        case ReductionKind::PendantRemoval: {
            Biclique star{BitVec(kr.orig_n_left), BitVec(kr.orig_n_right)};
            side_of(star, e.side).set(e.removed);
            side_of(star, Work::opposite(e.side)) = e.neighbor_snapshot;
            cover.push_back(std::move(star));
            break;
        }
        case ReductionKind::FullDegreeRemoval:
            if (!cover.empty()) {
                for (auto& b : cover) side_of(b, e.side).set(e.removed);
            } else if (e.neighbor_snapshot.any()) {
                Biclique star{BitVec(kr.orig_n_left), BitVec(kr.orig_n_right)};
                side_of(star, e.side).set(e.removed);
                side_of(star, Work::opposite(e.side)) = e.neighbor_snapshot;
                cover.push_back(std::move(star));
            }
            break;
        }
    }
    return cover;
}

} // namespace modresc

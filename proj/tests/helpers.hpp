#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "cubeslides/spanning_tree.hpp"

namespace testutil {

inline cubeslides::CubeEdge edge(cubeslides::Vertex lower, int dir) {
    return cubeslides::CubeEdge{lower, dir};
}

// The running example: the upright tree with choices {1,2,3}->3, {1,2}->2,
// {1,3}->1, {2,3}->2 and forced singletons. Mask 2421.
inline cubeslides::SpanningTree example_tree() {
    return cubeslides::tree_from_edges(
        3, {edge(0, 1), edge(0, 2), edge(0, 3), edge(1, 2), edge(4, 1), edge(4, 2),
            edge(3, 3)});
}

// Independent brute-force oracle for the Q_3 tree set: every 7-subset of the
// 12 edges, spanning-ness decided by depth-first search rather than the
// library's union-find. Returns the 12-bit edge masks, ascending.
inline std::vector<std::uint16_t> brute_force_q3_masks() {
    // edge k joins lo[k] and hi[k]; same numbering the library documents:
    // direction ascending, then lower endpoint ascending
    int lo[12], hi[12];
    for (int dir = 0; dir < 3; ++dir) {
        int rank = 0;
        for (int v = 0; v < 8; ++v) {
            if (v & (1 << dir)) continue;
            lo[dir * 4 + rank] = v;
            hi[dir * 4 + rank] = v | (1 << dir);
            ++rank;
        }
    }
    std::vector<std::uint16_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        if (std::popcount(mask) != 7) continue;
        // DFS over the chosen edges from vertex 0
        int stack[8] = {0};
        int top = 1;
        bool seen[8] = {true, false, false, false, false, false, false, false};
        int visited = 1;
        while (top > 0) {
            const int v = stack[--top];
            for (int k = 0; k < 12; ++k) {
                if (!((mask >> k) & 1u)) continue;
                int w = -1;
                if (lo[k] == v) w = hi[k];
                if (hi[k] == v) w = lo[k];
                if (w < 0 || seen[w]) continue;
                seen[w] = true;
                ++visited;
                stack[top++] = w;
            }
        }
        // 7 edges reaching all 8 vertices from the root is a spanning tree
        if (visited == 8) masks.push_back(static_cast<std::uint16_t>(mask));
    }
    return masks;
}

inline std::set<std::uint16_t> mask_set(const std::vector<cubeslides::SpanningTree>& trees) {
    std::set<std::uint16_t> out;
    for (const auto& t : trees) out.insert(cubeslides::tree_mask3(t));
    return out;
}

}  // namespace testutil

#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// An edge slide replaces a tree edge e (direction != i) with its reflection
// across direction i, moving it between the faces F-_i and F+_i.
enum class Vertical : std::uint8_t { up, down };

struct SlideMove {
    CubeEdge edge;   // tree edge being slid
    int dir;         // slide direction i, never edge.dir
    Vertical vertical;  // up: edge currently in F-_i; down: in F+_i

    friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

// Definition-level test: true iff removing e and inserting its reflection
// yields a spanning tree again. This is the ground truth the path criterion
// and the slide-count laws are verified against.
// Throws if e is not a tree edge or dir equals e.dir.
bool is_slidable(const SpanningTree& tree, const CubeEdge& e, int dir);

// All edges slidable in direction `dir`, with their vertical classification.
// Ordered by the reflection orbit {e, sigma_dir(e)} of each edge, so the list
// is stable across members of the same slide class.
std::vector<SlideMove> slidable_edges(const SpanningTree& tree, int dir);

// Every legal move of the tree, sorted by slide direction then by the
// canonical index of the slid edge.
std::vector<SlideMove> all_slide_moves(const SpanningTree& tree);

SpanningTree slide(const SpanningTree& tree, const CubeEdge& e, int dir);

// Edges shared by tree and slide(tree,e,dir) whose orientation sign flips.
std::vector<CubeEdge> flipped_edges(const SpanningTree& tree, const CubeEdge& e,
                                    int dir);

// The same flip set derived from the structure of the move instead of by
// re-orienting: the edges on the cycle closed by the reflected edge that lie
// in the non-root component of tree - e. Independent route for testing.
std::vector<CubeEdge> flip_set_via_cycle(const SpanningTree& tree, const CubeEdge& e,
                                         int dir);

// The unique direction-`dir` edge whose orientation the slide reverses,
// verified by re-orienting before and after, together with the fact that the
// slid edge hands its orientation to its reflection. Both guarantees are
// n = 3 facts; for larger n this throws when they fail.
CubeEdge reversed_edge(const SpanningTree& tree, const CubeEdge& e, int dir);

// Vertex path strictly between two direction-`dir` tree edges, cut short at
// the first further dir-edge so the returned segment avoids them all.
std::vector<Vertex> path_between_edges(const SpanningTree& tree, const CubeEdge& e1,
                                       const CubeEdge& e2, int dir);

// Walks the tree path between two direction-`dir` edges, locates the
// crossing point of the reflected-path map, and returns the slidable edge it
// certifies. Works for every n.
CubeEdge find_slidable_on_path(const SpanningTree& tree, const CubeEdge& e1,
                               const CubeEdge& e2, int dir);

// The family of trees reachable by sliding any subset of the dir-slidable
// edges. members[eps] chooses the reflected copy of slidable[j] whenever bit
// j of eps is set; members[0] is the base tree.
struct SlideClass {
    SpanningTree base;
    int dir;
    std::vector<CubeEdge> slidable;
    std::vector<SpanningTree> members;
};

// For n >= 4 simultaneous slides can fail; the report names the smallest
// failing choice vector and a closed vertex cycle certifying the failure.
struct DependenceReport {
    std::uint32_t epsilon;
    std::vector<Vertex> cycle;
};

std::variant<SlideClass, DependenceReport> slide_class(const SpanningTree& tree,
                                                       int dir);

// Closed vertex walk along a cycle of the given edge set. Used to certify
// failed joint slides; throws if the set is acyclic.
std::vector<Vertex> cycle_certificate(int n, const std::vector<CubeEdge>& edges);

// Performs every possible downward slide in one direction (n = 3 only, where
// the class structure makes the result unique). The traced variant also
// reports the individual moves for partition tracking; independence makes
// the outcome order-free, and SlotOrder lets tests exercise that.
struct TraceMove {
    CubeEdge before;  // position of the slid edge prior to the move
    int dir;          // slide direction; position after is the reflection
};

enum class SlotOrder : std::uint8_t { ascending, descending };

SpanningTree retract_direction(const SpanningTree& tree, int dir);
std::pair<SpanningTree, std::vector<TraceMove>> retract_direction_traced(
    const SpanningTree& tree, int dir, SlotOrder order = SlotOrder::ascending);

// Full retraction onto upright trees: directions 3, 2, 1 in turn.
SpanningTree retract(const SpanningTree& tree);

// Greedy downward normalization for any n: repeatedly performs the first
// available downward slide (slide direction ascending, then canonical index
// of the slid edge). Each step moves an edge to a lower face, so the total
// endpoint cardinality strictly decreases and the loop terminates at an
// upright tree.
struct NormalizeResult {
    SpanningTree tree;
    std::size_t slides;
};

NormalizeResult normalize_downward(const SpanningTree& tree);

}  // namespace cubeslides

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubeslides/hypercube.hpp"

namespace cubeslides {

// A spanning tree of Q_n: 2^n - 1 cube edges, connected and acyclic.
// Edges are kept sorted in canonical index order, so two trees are equal
// iff their edge vectors are equal. Always rooted at the empty set.
struct SpanningTree {
    int n = 1;
    std::vector<CubeEdge> edges;

    bool contains(const CubeEdge& e) const;

    friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

// Validates and canonicalizes an edge list. Duplicates are merged before the
// size check. Throws std::invalid_argument naming the broken invariant
// (invalid edge, wrong edge count, cycle, disconnected).
SpanningTree tree_from_edges(int n, std::vector<CubeEdge> edges);

// Non-throwing check used by enumeration and search inner loops.
// Expects edges valid for n; only the count/acyclic/connected part is tested.
bool is_spanning_tree_edge_set(int n, const std::vector<CubeEdge>& edges);

// Parent structure of the tree rooted at the empty set.
//   parent[v]   : neighbour of v on the path to the root (parent[0] = 0)
//   parent_dir[v]: direction of the edge {v, parent[v]} (0 at the root)
//   depth[v]    : path length to the root
//   adj[v]      : bitmask over directions d with edge {v, v^bit(d)} in the tree
struct RootedTree {
    std::vector<Vertex> parent;
    std::vector<std::uint8_t> parent_dir;
    std::vector<std::uint16_t> depth;
    std::vector<std::uint8_t> adj;
};

RootedTree root_tree(const SpanningTree& tree);

// Vertex path between two tree vertices, endpoints included.
std::vector<Vertex> tree_path(const RootedTree& rooted, Vertex from, Vertex to);

// Orientation signs mu(e), stored parallel to tree.edges:
// +1 if the walk toward the root crosses e upward (gaining an element),
// -1 if downward.
struct Orientation {
    std::vector<std::int8_t> mu;
};

Orientation orientation(const SpanningTree& tree);
Orientation orientation(const SpanningTree& tree, const RootedTree& rooted);
std::int8_t mu_of(const SpanningTree& tree, const Orientation& orient,
                  const CubeEdge& e);

// Direction monomial exponents: k_i = number of edges in direction i.
// Doubles as the slide-invariant signature.
std::vector<int> direction_monomial(const SpanningTree& tree);
using Signature = std::vector<int>;
std::string signature_str(const Signature& sig);

// Decoupled degree exponents, two routes that must agree:
// edgewise accumulates the per-edge factor x_S x_R / x_[n];
// oriented evaluates x_i = 1 + sum of mu over the i-edges.
std::vector<int> dd_exponents_edgewise(const SpanningTree& tree);
std::vector<int> dd_exponents_oriented(const SpanningTree& tree);

bool is_upright(const SpanningTree& tree);

// Compact 12-bit edge mask, the canonical identifier for Q_3 trees.
std::uint16_t tree_mask3(const SpanningTree& tree);
SpanningTree tree_from_mask3(std::uint16_t mask);

// Text payloads: decimal mask for n=3, comma-joined sorted edge indices
// for n >= 4. decode(n, encode(T)) == T.
std::string encode(const SpanningTree& tree);
SpanningTree decode(int n, const std::string& payload);

}  // namespace cubeslides

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubeslides/slides.hpp"
#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Graph on the 384 spanning trees of Q_3, adjacent when one slide apart.
// Nodes are the 12-bit edge masks in ascending order; adjacency lists hold
// node indices and carry the move that realizes each edge.
struct SlideGraph {
    std::vector<std::uint16_t> nodes;                 // masks, ascending
    std::vector<std::vector<std::uint32_t>> adj;      // neighbour node indices
    std::vector<std::vector<SlideMove>> moves;        // parallel to adj

    std::size_t edge_total() const;
    std::uint32_t index_of(std::uint16_t mask) const;  // throws if absent
};

SlideGraph build_slide_graph_serial();
SlideGraph build_slide_graph(int threads = 0);

struct ComponentRecord {
    std::vector<std::uint16_t> members;  // masks, ascending
    Signature signature;
    std::size_t size = 0;
    bool q4_isomorphic = false;
    std::size_t upright_count = 0;

    std::uint16_t id() const { return members.front(); }
};

// Connected components with census data, ordered by component id.
// Size-16 components are certified as 4-cubes during the census.
std::vector<ComponentRecord> components(const SlideGraph& graph);

// Constructive 4-cube certificate for a 16-tree component: the four moves of
// its least tree, grouped into slots by slid edge, generate all members as
// the choice cube {0,1}^4, with graph adjacency matching Hamming distance 1.
// Throws on components of the wrong size; returns false with no side effects
// if certification fails.
bool certify_q4_component(const SlideGraph& graph, const ComponentRecord& comp);

// Deterministic DOT text (undirected). Nodes are labeled "T<mask> (k1,k2,k3)".
std::string to_dot(const SlideGraph& graph);
std::string to_dot(const SlideGraph& graph, std::span<const ComponentRecord> comps);

// CSV census: signature,component_id,size,q4_certified,upright_count
std::string census_csv(std::span<const ComponentRecord> comps);

}  // namespace cubeslides

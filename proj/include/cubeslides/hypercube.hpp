#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cubeslides {

// Vertices of Q_n are the subsets of {1,...,n}, stored as bitmasks:
// bit (i-1) is set iff element i belongs to the subset.
using Vertex = std::uint32_t;

// Everything in this library is desk scale; n above 8 is rejected everywhere.
inline constexpr int kMaxN = 8;

constexpr std::uint32_t vertex_count(int n) { return 1u << n; }
constexpr std::uint32_t cube_edge_count(int n) {
    return static_cast<std::uint32_t>(n) << (n - 1);
}
constexpr Vertex direction_bit(int dir) { return 1u << (dir - 1); }
constexpr bool has_element(Vertex v, int dir) {
    return (v >> (dir - 1)) & 1u;
}

void require_n(int n);
void require_direction(int n, int dir);
void require_vertex(int n, Vertex v);

// An edge of Q_n joins S and S u {i}; we keep the endpoint that does not
// contain the direction, so bit (dir-1) of `lower` is always clear.
struct CubeEdge {
    Vertex lower = 0;
    int dir = 1;

    Vertex upper() const { return lower | direction_bit(dir); }
    // true iff the edge lies in the lower face F-_i (both endpoints omit i)
    bool in_lower_face(int i) const { return !has_element(lower, i); }

    friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
    // same relative order as the canonical edge index: direction, then lower
    friend std::strong_ordering operator<=>(const CubeEdge& a, const CubeEdge& b) {
        if (auto c = a.dir <=> b.dir; c != 0) return c;
        return a.lower <=> b.lower;
    }
};

void require_edge(int n, const CubeEdge& e);

// Reflection across direction `dir`: symmetric difference with {dir}.
// An involution exchanging the faces F+_dir and F-_dir.
Vertex reflect(int n, Vertex v, int dir);

// Endpoint-wise reflection of an edge in another direction. Reflecting an
// edge across its own direction maps it to itself and is rejected: no slide
// ever uses it, so a caller doing that is confused.
CubeEdge reflect_edge(int n, const CubeEdge& e, int dir);

// Canonical dense numbering of the n*2^(n-1) edges: sort by direction
// ascending, then lower endpoint ascending. Keeps every serialized edge set
// bit-exact and diff-stable.
std::uint32_t edge_index(int n, const CubeEdge& e);
CubeEdge edge_at(int n, std::uint32_t index);

// "{1,3}" style subset notation for human-facing output; "{}" for the root.
std::string subset_str(Vertex v);
std::string edge_str(const CubeEdge& e);

}  // namespace cubeslides

#include "cubeslides/hypercube.hpp"

#include <stdexcept>

namespace cubeslides {

void require_n(int n) {
    if (n < 1 || n > kMaxN)
        throw std::invalid_argument("n must be in [1," + std::to_string(kMaxN) +
                                    "], got " + std::to_string(n));
}

void require_direction(int n, int dir) {
    if (dir < 1 || dir > n)
        throw std::invalid_argument("invalid direction " + std::to_string(dir) +
                                    " for n=" + std::to_string(n));
}

void require_vertex(int n, Vertex v) {
    if (v >= vertex_count(n))
        throw std::invalid_argument("vertex bits " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
}

void require_edge(int n, const CubeEdge& e) {
    require_direction(n, e.dir);
    require_vertex(n, e.lower);
    if (has_element(e.lower, e.dir))
        throw std::invalid_argument("edge lower endpoint " + subset_str(e.lower) +
                                    " already contains direction " +
                                    std::to_string(e.dir));
}

Vertex reflect(int n, Vertex v, int dir) {
    require_n(n);
    require_direction(n, dir);
    require_vertex(n, v);
    return v ^ direction_bit(dir);
}

CubeEdge reflect_edge(int n, const CubeEdge& e, int dir) {
    require_edge(n, e);
    require_direction(n, dir);
    if (dir == e.dir)
        throw std::invalid_argument("cannot reflect an edge across its own direction " +
                                    std::to_string(dir));
    return CubeEdge{e.lower ^ direction_bit(dir), e.dir};
}

std::uint32_t edge_index(int n, const CubeEdge& e) {
    require_edge(n, e);
    const int p = e.dir - 1;
    // rank of `lower` among the 2^(n-1) vertices with bit p clear:
    // drop bit p and read the remaining bits as an integer
    const Vertex low = e.lower & (direction_bit(e.dir) - 1);
    const Vertex high = e.lower >> (p + 1);
    const std::uint32_t rank = (high << p) | low;
    return static_cast<std::uint32_t>(p) * (1u << (n - 1)) + rank;
}

CubeEdge edge_at(int n, std::uint32_t index) {
    require_n(n);
    if (index >= cube_edge_count(n))
        throw std::invalid_argument("edge index " + std::to_string(index) +
                                    " out of range for n=" + std::to_string(n));
    const std::uint32_t half = 1u << (n - 1);
    const int p = static_cast<int>(index / half);
    const std::uint32_t rank = index % half;
    const Vertex low = rank & ((1u << p) - 1);
    const Vertex high = rank >> p;
    return CubeEdge{(high << (p + 1)) | low, p + 1};
}

std::string subset_str(Vertex v) {
    std::string out = "{";
    bool first = true;
    for (int i = 1; v != 0; ++i, v >>= 1) {
        if (v & 1u) {
            if (!first) out += ',';
            out += std::to_string(i);
            first = false;
        }
    }
    out += '}';
    return out;
}

std::string edge_str(const CubeEdge& e) {
    return "(" + subset_str(e.lower) + "," + subset_str(e.upper()) + ")";
}

}  // namespace cubeslides

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace cubeslides {

// Small union-find for connectivity checks on <=256 vertices.
struct UnionFind {
    std::vector<std::uint16_t> parent;
    std::uint32_t components;

    explicit UnionFind(std::uint32_t size) : parent(size), components(size) {
        std::iota(parent.begin(), parent.end(), std::uint16_t{0});
    }

    std::uint16_t find(std::uint16_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // returns false if x and y were already connected
    bool unite(std::uint16_t x, std::uint16_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[y] = x;
        --components;
        return true;
    }
};

}  // namespace cubeslides

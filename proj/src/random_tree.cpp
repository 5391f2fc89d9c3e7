#include "cubeslides/random_tree.hpp"

#include "cubeslides/parallel.hpp"

namespace cubeslides {

SplitMix64 split_stream(std::uint64_t seed, std::uint64_t stream) {
    // run the mixer once over the pair so adjacent streams decorrelate
    SplitMix64 outer{seed ^ (stream * 0xd6e8feb86659fd93ull + 0x2545f4914f6cdd1dull)};
    return SplitMix64{outer.next()};
}

std::uint32_t bounded(SplitMix64& rng, std::uint32_t bound) {
    // rejection below the largest multiple of bound
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng.next();
    } while (draw >= limit);
    return static_cast<std::uint32_t>(draw % bound);
}

SpanningTree random_spanning_tree(int n, std::uint64_t seed, std::uint64_t stream) {
    require_n(n);
    SplitMix64 rng = split_stream(seed, stream);
    const std::uint32_t nv = vertex_count(n);
    std::vector<bool> in_tree(nv, false);
    std::vector<std::uint8_t> exit_dir(nv, 0);
    in_tree[0] = true;
    std::vector<CubeEdge> edges;
    edges.reserve(nv - 1);
    for (Vertex start = 1; start < nv; ++start) {
        if (in_tree[start]) continue;
        // walk until the current tree is hit; loops erase themselves because
        // revisiting a vertex overwrites its exit direction
        Vertex v = start;
        while (!in_tree[v]) {
            const int d =
                static_cast<int>(bounded(rng, static_cast<std::uint32_t>(n))) + 1;
            exit_dir[v] = static_cast<std::uint8_t>(d);
            v ^= direction_bit(d);
        }
        v = start;
        while (!in_tree[v]) {
            in_tree[v] = true;
            const int d = exit_dir[v];
            edges.push_back(CubeEdge{v & ~direction_bit(d), d});
            v ^= direction_bit(d);
        }
    }
    return tree_from_edges(n, std::move(edges));
}

std::vector<SpanningTree> sample_batch_serial(int n, std::size_t count,
                                              std::uint64_t seed) {
    std::vector<SpanningTree> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_spanning_tree(n, seed, i));
    return out;
}

std::vector<SpanningTree> sample_batch(int n, std::size_t count, std::uint64_t seed,
                                       int threads) {
    const int nthreads = resolve_threads(threads);
    std::vector<SpanningTree> out(count);
#pragma omp parallel for num_threads(nthreads) schedule(static)
    for (std::size_t i = 0; i < count; ++i)
        out[i] = random_spanning_tree(n, seed, i);
    return out;
}

}  // namespace cubeslides

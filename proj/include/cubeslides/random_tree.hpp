#pragma once

#include <cstdint>
#include <vector>

#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Deterministic, splittable pseudo-random source. The algorithm name and
// version below are recorded in sampler output so results stay reproducible
// if the generator ever changes.
inline constexpr const char* kRngName = "wilson-splitmix64/1";

struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

// Independent substream for (seed, stream); gives every sample index and
// every search candidate its own generator.
SplitMix64 split_stream(std::uint64_t seed, std::uint64_t stream);

// Unbiased uniform draw from [0, bound); rejection sampling, no modulo bias.
std::uint32_t bounded(SplitMix64& rng, std::uint32_t bound);

// Exactly uniform spanning tree of Q_n via Wilson's loop-erased random walk
// on substream (seed, stream). Same arguments, same tree. n <= 8.
SpanningTree random_spanning_tree(int n, std::uint64_t seed,
                                  std::uint64_t stream = 0);

// count trees sampled from substreams (seed, 0), (seed, 1), ...; the OpenMP
// batch produces output identical to the serial reference.
std::vector<SpanningTree> sample_batch_serial(int n, std::size_t count,
                                              std::uint64_t seed);
std::vector<SpanningTree> sample_batch(int n, std::size_t count, std::uint64_t seed,
                                       int threads = 0);

}  // namespace cubeslides

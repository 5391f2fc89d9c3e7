#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubeslides/slides.hpp"
#include "cubeslides/spanning_tree.hpp"

namespace cubeslides {

// Randomized hunts for the phenomena that stop the n = 3 machinery from
// extending upward: trees with more slidable edges than the guaranteed
// k_i - 1 (n = 4), and slidable sets whose joint slide breaks (n = 5).
// Candidates are uniform random trees followed by short random slide walks;
// the budget counts trees examined. Deterministic for a fixed seed,
// independent of thread count: both searches return the witness with the
// smallest candidate index.

struct SearchOptions {
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 0;
};

struct ExcessWitness {
    SpanningTree tree;
    int dir = 0;
    int direction_edges = 0;           // k_i of the witness direction
    std::vector<SlideMove> slidable;   // strictly more than k_i - 1 of them
    std::uint64_t candidate_index = 0;
};

struct DependentWitness {
    SpanningTree tree;
    int dir = 0;
    std::vector<CubeEdge> slidable;    // exactly k_i - 1 edges
    std::uint32_t epsilon = 0;         // failing joint choice over `slidable`
    std::vector<Vertex> cycle;         // closed vertex walk in the failed set
    std::uint64_t candidate_index = 0;
};

std::optional<ExcessWitness> search_excess_slides_serial(int n,
                                                         const SearchOptions& opts);
std::optional<ExcessWitness> search_excess_slides(int n, const SearchOptions& opts);

std::optional<DependentWitness> search_dependent_slides_serial(
    int n, const SearchOptions& opts);
std::optional<DependentWitness> search_dependent_slides(int n,
                                                        const SearchOptions& opts);

// Re-derivations from scratch, used on fixtures and fresh finds alike.
// Returns an empty string when the witness holds, else a description of the
// first broken claim.
std::string check_excess_witness(const ExcessWitness& w);
std::string check_dependent_witness(const DependentWitness& w);

}  // namespace cubeslides

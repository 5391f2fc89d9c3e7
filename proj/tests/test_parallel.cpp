#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// The OpenMP kernels must reproduce their serial reference implementations
// exactly, whatever the thread count.

#include "cubeslides/enumerate.hpp"
#include "cubeslides/laurent.hpp"
#include "cubeslides/random_tree.hpp"
#include "cubeslides/search.hpp"
#include "cubeslides/slide_graph.hpp"

using namespace cubeslides;

TEST_CASE("slide graph build") {
    const SlideGraph serial = build_slide_graph_serial();
    for (int threads : {2, 3, 7}) {
        const SlideGraph parallel = build_slide_graph(threads);
        CHECK(serial.nodes == parallel.nodes);
        CHECK(serial.adj == parallel.adj);
    }
}

TEST_CASE("weight sums") {
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    const Laurent serial = weight_sum_serial(trees);
    for (int threads : {2, 5}) CHECK(serial == weight_sum(trees, threads));
}

TEST_CASE("sample batches") {
    const auto serial = sample_batch_serial(5, 500, 42);
    for (int threads : {2, 4}) {
        const auto parallel = sample_batch(5, 500, 42, threads);
        CHECK(serial == parallel);
    }
}

TEST_CASE("spanning tree counts") {
    CHECK(count_spanning_trees_serial(3, {}) == count_spanning_trees(3, {false, 4}));
}

TEST_CASE("searches return the same witness at any width") {
    const SearchOptions wide{8000, 0x5eed, 4};
    const SearchOptions narrow{8000, 0x5eed, 1};
    const auto a = search_excess_slides(4, wide);
    const auto b = search_excess_slides_serial(4, narrow);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->candidate_index == b->candidate_index);
    CHECK(a->tree == b->tree);

    const auto c = search_dependent_slides(5, wide);
    const auto d = search_dependent_slides_serial(5, narrow);
    REQUIRE(c.has_value());
    REQUIRE(d.has_value());
    CHECK(c->candidate_index == d->candidate_index);
    CHECK(c->tree == d->tree);
    CHECK(c->epsilon == d->epsilon);
}

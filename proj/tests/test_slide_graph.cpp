#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "cubeslides/slide_graph.hpp"
#include "helpers.hpp"

using namespace cubeslides;

TEST_CASE("graph build") {
    const SlideGraph g = build_slide_graph();
    CHECK(g.nodes.size() == 384);
    CHECK(g.edge_total() == 768);
    for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
        CHECK(g.adj[i].size() == 4);
        const Signature sig = direction_monomial(tree_from_mask3(g.nodes[i]));
        for (std::size_t k = 0; k < g.adj[i].size(); ++k) {
            const std::uint32_t j = g.adj[i][k];
            CHECK(direction_monomial(tree_from_mask3(g.nodes[j])) == sig);
            CHECK(std::find(g.adj[j].begin(), g.adj[j].end(), i) != g.adj[j].end());
            // the recorded move really is the slide joining the two trees
            const SpanningTree t = tree_from_mask3(g.nodes[i]);
            CHECK(tree_mask3(slide(t, g.moves[i][k].edge, g.moves[i][k].dir)) ==
                  g.nodes[j]);
        }
    }
    CHECK_THROWS_AS(g.index_of(0), std::invalid_argument);
}

TEST_CASE("component census") {
    const SlideGraph g = build_slide_graph();
    const std::vector<ComponentRecord> comps = components(g);
    std::size_t small = 0, large = 0;
    std::map<std::vector<int>, std::size_t> by_sorted_signature;
    for (const ComponentRecord& c : comps) {
        if (c.size == 16) {
            ++small;
            CHECK(c.q4_isomorphic);
            CHECK(c.upright_count == 1);
            // a certified choice cube has 16*4/2 internal edges
            std::size_t internal = 0;
            for (const std::uint16_t m : c.members) {
                const std::uint32_t i = g.index_of(m);
                for (const std::uint32_t j : g.adj[i])
                    internal += std::binary_search(c.members.begin(), c.members.end(),
                                                   g.nodes[j]);
            }
            CHECK(internal == 64);  // directed count
        } else {
            CHECK(c.size == 64);
            ++large;
            CHECK_FALSE(c.q4_isomorphic);
            CHECK(c.upright_count == 4);
            CHECK_THROWS_AS(certify_q4_component(g, c), std::invalid_argument);
        }
        std::vector<int> sorted = c.signature;
        std::sort(sorted.begin(), sorted.end());
        by_sorted_signature[sorted] += 1;
    }
    CHECK(small == 12);
    CHECK(large == 3);
    CHECK(by_sorted_signature[{1, 2, 4}] == 6);
    CHECK(by_sorted_signature[{1, 3, 3}] == 6);
    CHECK(by_sorted_signature[{2, 2, 3}] == 3);
}

TEST_CASE("dot export") {
    const SlideGraph g = build_slide_graph();
    const std::vector<ComponentRecord> comps = components(g);

    const std::string empty = to_dot(g, std::span<const ComponentRecord>{});
    CHECK(empty == "graph edge_slide_graph {\n}\n");

    const std::string full = to_dot(g, comps);
    CHECK(std::count(full.begin(), full.end(), '\n') == 2 + 384 + 768);
    CHECK(full.find("\"T2421\" [label=\"T2421 (2,3,2)\"];") != std::string::npos);

    // deterministic output
    CHECK(full == to_dot(g, comps));
}

TEST_CASE("census csv") {
    const SlideGraph g = build_slide_graph();
    const std::vector<ComponentRecord> comps = components(g);
    const std::string csv = census_csv(comps);
    CHECK(csv.rfind("signature,component_id,size,q4_certified,upright_count\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);  // header + 15 components
    CHECK(csv.find(",64,false,4\n") != std::string::npos);
    CHECK(csv.find(",16,true,1\n") != std::string::npos);
}

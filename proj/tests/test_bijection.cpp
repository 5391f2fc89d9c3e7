#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "cubeslides/bijection.hpp"
#include "cubeslides/enumerate.hpp"
#include "cubeslides/laurent.hpp"
#include "cubeslides/slides.hpp"
#include "helpers.hpp"

using namespace cubeslides;
using testutil::edge;

TEST_CASE("upright recognition") {
    const SpanningTree t = testutil::example_tree();
    CHECK(is_upright(t));
    CHECK_FALSE(is_upright(slide(t, edge(0, 3), 1)));

    std::size_t upright = 0;
    for (const SpanningTree& tree : enumerate_spanning_trees(3))
        upright += is_upright(tree);
    CHECK(upright == 24);
}

TEST_CASE("sections of upright trees") {
    const SpanningTree t = testutil::example_tree();
    const Section s = section_of_upright(t);
    CHECK(s.choice[0b111] == 3);
    CHECK(s.choice[0b011] == 2);
    CHECK(s.choice[0b101] == 1);
    CHECK(s.choice[0b110] == 2);
    for (int i = 1; i <= 3; ++i) CHECK(s.choice[direction_bit(i)] == i);
    CHECK(upright_of_section(s) == t);

    CHECK_THROWS_AS(section_of_upright(slide(t, edge(0, 3), 1)),
                    std::invalid_argument);

    // all 24 sections, distinct upright trees, both ways round
    std::set<std::uint16_t> built;
    for_each_section(3, [&](const Section& section) {
        const SpanningTree tree = upright_of_section(section);
        CHECK(is_upright(tree));
        CHECK(section_of_upright(tree) == section);
        built.insert(tree_mask3(tree));
    });
    CHECK(built.size() == 24);
}

TEST_CASE("section counts") {
    CHECK(count_sections(3) == 24);
    CHECK(count_signed_sections(2) == 4);
    CHECK(count_signed_sections(3) == 384);
    for (int n = 1; n <= 5; ++n) CHECK(count_signed_sections(n) == formula_count(n));

    // the lone section of Q_1 builds the lone tree
    std::size_t n1 = 0;
    for_each_section(1, [&](const Section& s) {
        ++n1;
        CHECK(upright_of_section(s) == tree_from_edges(1, {edge(0, 1)}));
    });
    CHECK(n1 == 1);
}

TEST_CASE("Q_4 upright trees are the sections") {
    CHECK(count_sections(4) == 20736);
    std::set<std::string> distinct;
    std::size_t total = 0;
    for_each_section(4, [&](const Section& section) {
        const SpanningTree tree = upright_of_section(section);
        CHECK(is_upright(tree));
        CHECK(section_of_upright(tree) == section);
        distinct.insert(encode(tree));
        ++total;
    });
    CHECK(total == 20736);
    CHECK(distinct.size() == 20736);
}

TEST_CASE("signed section of the example tree") {
    const SignedSection ss = to_signed_section(testutil::example_tree());
    CHECK(ss.dir[0b011] == 2);
    CHECK(ss.dir[0b101] == 1);
    CHECK(ss.dir[0b110] == 2);
    CHECK(ss.dir[0b111] == 3);
    for (Vertex s = 0; s < 8; ++s)
        if (std::popcount(s) >= 2) CHECK(ss.sign[s] == -1);
}

TEST_CASE("weight preservation and bijectivity") {
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    std::set<std::string> seen;
    for (const SpanningTree& t : trees) {
        const SignedSection ss = to_signed_section(t);
        CHECK(section_q_exponents(ss) == direction_monomial(t));
        CHECK(section_x_exponents(ss) == dd_exponents_edgewise(t));
        std::string key;
        for (Vertex s = 0; s < 8; ++s)
            key += std::to_string(ss.dir[s]) + std::to_string(ss.sign[s] + 1);
        seen.insert(key);
    }
    CHECK(seen.size() == 384);
}

TEST_CASE("inverse round trip") {
    // hand-built all-minus section with the example tree's choices: the
    // inverse needs no slides at all
    SignedSection all_minus{3, std::vector<std::uint8_t>(8, 0),
                            std::vector<std::int8_t>(8, 0)};
    all_minus.dir[0b011] = 2;
    all_minus.dir[0b101] = 1;
    all_minus.dir[0b110] = 2;
    all_minus.dir[0b111] = 3;
    for (Vertex s : {0b011u, 0b101u, 0b110u, 0b111u}) all_minus.sign[s] = -1;
    CHECK(tree_from_signed_section(all_minus) == testutil::example_tree());

    for (const SpanningTree& t : enumerate_spanning_trees(3))
        CHECK(tree_from_signed_section(to_signed_section(t)) == t);
}

TEST_CASE("the retraction slide order does not affect the signed section") {
    for (const SpanningTree& t : enumerate_spanning_trees(3))
        CHECK(to_signed_section(t) == to_signed_section(t, SlotOrder::descending));
}

TEST_CASE("fixing the choices, the sign vectors sweep a retraction fibre") {
    const SpanningTree t = testutil::example_tree();
    const SignedSection base = to_signed_section(t);
    std::set<std::uint16_t> fibre;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        SignedSection ss = base;
        std::uint32_t at = 0;
        for (Vertex s = 0; s < 8; ++s) {
            if (std::popcount(s) < 2) continue;
            ss.sign[s] = (bits >> at) & 1u ? 1 : -1;
            ++at;
        }
        const SpanningTree member = tree_from_signed_section(ss);
        CHECK(retract(member) == t);
        fibre.insert(tree_mask3(member));
    }
    CHECK(fibre.size() == 16);
}

TEST_CASE("worked retraction example, reconstructed by search") {
    // Constraints stated for the running retraction example: the 3-slidable
    // edges are ({2},{1,2}) upward and ({1,3},{1,2,3}) downward, with
    // partition P_3 = {({1},{1,3})}, N_3 = {({1,2},{1,2,3})} and pinned edge
    // ({2},{2,3}). Two trees satisfy them; exactly one also yields the
    // recorded signed section, and that one is frozen here.
    std::vector<std::uint16_t> matches;
    for (const SpanningTree& t : enumerate_spanning_trees(3)) {
        const std::vector<SlideMove> moves = slidable_edges(t, 3);
        if (moves.size() != 2) continue;
        if (!(moves[0].edge == edge(2, 1) && moves[0].vertical == Vertical::up))
            continue;
        if (!(moves[1].edge == edge(5, 2) && moves[1].vertical == Vertical::down))
            continue;
        const EdgePartition part = direction_partition(t, 3);
        if (part.down_reversible != std::vector<CubeEdge>{edge(1, 3)}) continue;
        if (part.up_reversible != std::vector<CubeEdge>{edge(3, 3)}) continue;
        if (!(part.pinned == edge(2, 3))) continue;
        matches.push_back(tree_mask3(t));
    }
    CHECK(matches == std::vector<std::uint16_t>{3734, 3794});

    const SignedSection ss = to_signed_section(tree_from_mask3(3734));
    CHECK(ss.dir[0b011] == 2);
    CHECK(ss.sign[0b011] == +1);
    CHECK(ss.dir[0b101] == 1);
    CHECK(ss.sign[0b101] == +1);
    CHECK(ss.dir[0b110] == 3);
    CHECK(ss.sign[0b110] == +1);
    CHECK(ss.dir[0b111] == 3);
    CHECK(ss.sign[0b111] == -1);
}

TEST_CASE("signed-section weights reproduce the weighted count") {
    // summing section weights over all 384 trees gives the same Laurent
    // polynomial as the tree weights themselves
    const std::vector<SpanningTree> trees = enumerate_spanning_trees(3);
    Laurent via_sections;
    for (const SpanningTree& t : trees) {
        const SignedSection ss = to_signed_section(t);
        const std::vector<int> q = section_q_exponents(ss);
        const std::vector<int> x = section_x_exponents(ss);
        Laurent::Exponents exps;
        exps.insert(exps.end(), q.begin(), q.end());
        exps.insert(exps.end(), x.begin(), x.end());
        via_sections += Laurent::monomial(std::move(exps));
    }
    CHECK(via_sections == weighted_count_product(3));
    CHECK(via_sections == weight_sum_serial(trees));
}

TEST_CASE("malformed signed sections are rejected") {
    SignedSection ss{3, std::vector<std::uint8_t>(8, 0), std::vector<std::int8_t>(8, 0)};
    ss.dir[0b011] = 1;
    ss.sign[0b011] = 1;
    CHECK_THROWS_AS(validate_signed_section(ss), std::invalid_argument);  // others unset
    ss.dir[0b101] = 2;  // 2 is not in {1,3}
    ss.sign[0b101] = 1;
    ss.dir[0b110] = 2;
    ss.sign[0b110] = 1;
    ss.dir[0b111] = 1;
    ss.sign[0b111] = 1;
    CHECK_THROWS_AS(validate_signed_section(ss), std::invalid_argument);
}

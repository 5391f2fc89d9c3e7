#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "cubeslides/json_io.hpp"
#include "cubeslides/search.hpp"
#include "cubeslides/slides.hpp"

using namespace cubeslides;

#ifndef CUBESLIDES_FIXTURE_DIR
#define CUBESLIDES_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

nlohmann::json load_fixture(const std::string& name) {
    std::ifstream in(std::string(CUBESLIDES_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("guards reject the dimensions where the phenomena cannot occur") {
    CHECK_THROWS_AS(search_excess_slides(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_excess_slides(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_dependent_slides(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(search_dependent_slides(4, {}), std::invalid_argument);
}

TEST_CASE("excess search finds and certifies a witness") {
    const SearchOptions opts{20000, 0x5eed, 0};
    const auto w = search_excess_slides(4, opts);
    REQUIRE(w.has_value());
    CHECK(check_excess_witness(*w).empty());
    CHECK(w->slidable.size() >= static_cast<std::size_t>(w->direction_edges));

    // deterministic: serial reference finds the same candidate
    const auto serial = search_excess_slides_serial(4, opts);
    REQUIRE(serial.has_value());
    CHECK(serial->candidate_index == w->candidate_index);
    CHECK(serial->tree == w->tree);
    CHECK(serial->dir == w->dir);
}

TEST_CASE("dependent search finds and certifies a witness") {
    const SearchOptions opts{20000, 0x5eed, 0};
    const auto w = search_dependent_slides(5, opts);
    REQUIRE(w.has_value());
    CHECK(check_dependent_witness(*w).empty());

    // each chosen edge slides fine on its own; the joint move breaks
    for (std::size_t j = 0; j < w->slidable.size(); ++j)
        if ((w->epsilon >> j) & 1u) CHECK(is_slidable(w->tree, w->slidable[j], w->dir));

    const auto serial = search_dependent_slides_serial(5, opts);
    REQUIRE(serial.has_value());
    CHECK(serial->candidate_index == w->candidate_index);
    CHECK(serial->tree == w->tree);
    CHECK(serial->epsilon == w->epsilon);
}

TEST_CASE("exhausted budgets report not-found") {
    CHECK_FALSE(search_excess_slides(4, {1, 0x5eed, 0}).has_value());
}

TEST_CASE("stored excess fixture holds up") {
    const ExcessWitness w = excess_witness_from_record(load_fixture("excess_q4.json"));
    CHECK(check_excess_witness(w).empty());
    CHECK(w.slidable.size() == 5);
    CHECK(w.direction_edges == 4);

    // sliding a witness edge can strip slidability from the others
    bool some_edge_ceases = false;
    for (const SlideMove& m : w.slidable) {
        const SpanningTree t2 = slide(w.tree, m.edge, w.dir);
        for (const SlideMove& o : w.slidable) {
            if (o.edge == m.edge) continue;
            if (!is_slidable(t2, o.edge, w.dir)) some_edge_ceases = true;
        }
    }
    CHECK(some_edge_ceases);

    // round trip through the fixture format
    const auto j = witness_record(w);
    const ExcessWitness again = excess_witness_from_record(j);
    CHECK(again.tree == w.tree);
    CHECK(again.dir == w.dir);
}

TEST_CASE("stored dependent fixture holds up") {
    const DependentWitness w =
        dependent_witness_from_record(load_fixture("dependent_q5.json"));
    CHECK(check_dependent_witness(w).empty());

    // building the full slide class on the witness reports the dependence
    const auto cls = slide_class(w.tree, w.dir);
    REQUIRE(std::holds_alternative<DependenceReport>(cls));
    const DependenceReport& report = std::get<DependenceReport>(cls);
    CHECK(report.epsilon != 0);
    CHECK(report.cycle.size() >= 4);
    CHECK(report.cycle.front() == report.cycle.back());

    const auto j = witness_record(w);
    const DependentWitness again = dependent_witness_from_record(j);
    CHECK(again.tree == w.tree);
    CHECK(again.epsilon == w.epsilon);
    CHECK(again.cycle == w.cycle);
}

TEST_CASE("tampered witnesses are rejected") {
    ExcessWitness w = excess_witness_from_record(load_fixture("excess_q4.json"));
    w.slidable.push_back(w.slidable.front());
    CHECK_FALSE(check_excess_witness(w).empty());

    DependentWitness d =
        dependent_witness_from_record(load_fixture("dependent_q5.json"));
    d.cycle.pop_back();
    CHECK_FALSE(check_dependent_witness(d).empty());
}

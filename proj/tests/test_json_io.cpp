#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "cubeslides/json_io.hpp"
#include "cubeslides/random_tree.hpp"
#include "helpers.hpp"

using namespace cubeslides;

TEST_CASE("tree records") {
    const SpanningTree t = testutil::example_tree();
    const auto record = tree_record(t);
    CHECK(record.dump() ==
          R"({"n":3,"edges":[[0,1],[4,1],[0,2],[1,2],[4,2],[0,3],[3,3]]})");
    CHECK(tree_from_record(record) == t);

    const auto short_form = tree_record_mask(t);
    CHECK(short_form.dump() == R"({"n":3,"mask":2421})");
    CHECK(tree_from_record(short_form) == t);

    CHECK_THROWS_AS(tree_from_record(nlohmann::json::parse(R"({"n":4,"mask":7})")),
                    std::invalid_argument);

    // parse-emit stability across dimensions and seeds
    for (int n : {2, 4, 5})
        for (std::uint64_t s = 0; s < 25; ++s) {
            const SpanningTree tree = random_spanning_tree(n, 3, s);
            CHECK(tree_from_record(tree_record(tree)) == tree);
        }
}

TEST_CASE("signed section records") {
    const SignedSection ss = to_signed_section(testutil::example_tree());
    const auto record = signed_section_record(ss);
    CHECK(record.dump() ==
          R"({"n":3,"choices":[{"set":3,"dir":2,"sign":-1},{"set":5,"dir":1,"sign":-1},)"
          R"({"set":6,"dir":2,"sign":-1},{"set":7,"dir":3,"sign":-1}])"
          "}");
    CHECK(signed_section_from_record(record) == ss);

    CHECK_THROWS_AS(signed_section_from_record(nlohmann::json::parse(
                        R"({"n":3,"choices":[{"set":1,"dir":1,"sign":1}]})")),
                    std::invalid_argument);
}

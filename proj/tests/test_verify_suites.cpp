#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubeslides/verify.hpp"

// The exhaustive Q_3 machine checks, exactly as the CLI runs them.
TEST_CASE("every verification suite passes") {
    for (const cubeslides::SuiteResult& suite : cubeslides::verify_all()) {
        for (const cubeslides::CheckResult& check : suite.checks) {
            INFO(suite.suite, "/", check.name, ": ", check.details);
            CHECK(check.pass);
        }
    }
}

#include <doctest.h>

#include "vortexlab/config.hpp"

using namespace vortexlab;

static const char* sample = R"(
# d=1 disk solve
[experiment]
type = "solve-disk"
seed = 42

[grid]
kind = "disk"
extent = 10.0
n = 256

[divisor]
re = [0.0, 1.5]
im = [0.0, -0.5]
mult = [1, 2]

[solver]
tol = 1e-10
tau = 1.0
)";

TEST_CASE("config parses sections, scalars and arrays") {
    Config c = Config::parse(sample);
    CHECK(c.get_string("experiment.type") == "solve-disk");
    CHECK(c.get_int("experiment.seed") == 42);
    CHECK(c.get_string("grid.kind") == "disk");
    CHECK(c.get_double("grid.extent") == 10.0);
    CHECK(c.get_int("grid.n") == 256);
    auto re = c.get_array("divisor.re");
    REQUIRE(re.size() == 2);
    CHECK(re[1] == 1.5);
    CHECK(c.get_double("solver.tol") == 1e-10);
    CHECK(c.get_double("solver.tau") == 1.0);
    c.get_array("divisor.im");
    c.get_array("divisor.mult");
    CHECK_NOTHROW(c.reject_unconsumed());
}

TEST_CASE("unknown keys are rejected") {
    Config c = Config::parse("[grid]\nn = 64\nbogus = 1\n");
    CHECK(c.get_int("grid.n") == 64);
    CHECK_THROWS_AS(c.reject_unconsumed(), ValidationError);
}

TEST_CASE("missing keys and bad types throw") {
    Config c = Config::parse("[a]\nx = \"s\"\ny = 2.5\n");
    CHECK_THROWS_AS(c.get_double("a.missing"), ValidationError);
    CHECK_THROWS_AS(c.get_double("a.x"), ValidationError);
    CHECK_THROWS_AS(c.get_int("a.y"), ValidationError);
}

TEST_CASE("malformed lines throw with location") {
    CHECK_THROWS_AS(Config::parse("[grid\nn = 64\n"), ValidationError);
    CHECK_THROWS_AS(Config::parse("[g]\nn 64\n"), ValidationError);
    CHECK_THROWS_AS(Config::parse("[g]\nn = [1, 2\n"), ValidationError);
    CHECK_THROWS_AS(Config::parse("[g]\nn = 12abc\n"), ValidationError);
}

TEST_CASE("comments and defaults") {
    Config c = Config::parse("[s] # section\nk = 3 # value\n");
    CHECK(c.get_int("s.k", 7) == 3);
    CHECK(c.get_int("s.absent", 7) == 7);
    CHECK(c.get_bool("s.flag", true) == true);
}

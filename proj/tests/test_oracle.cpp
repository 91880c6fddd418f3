// Unit tests for the exhaustive minimum-length search on small instances.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "picod/core.hpp"
#include "picod/oracle.hpp"
#include "picod/schemes.hpp"
#include "picod/verifier.hpp"

using namespace picod;

TEST_CASE("infeasible small instances exhaust the full enumeration") {
    OracleResult r52 = oracle_search(Instance{5, 2}, 5);
    CHECK(r52.status == OracleStatus::Infeasible);
    CHECK_FALSE(r52.min_length.has_value());
    CHECK(r52.stats.spaces_examined > 0);

    OracleResult r74 = oracle_search(Instance{7, 4}, 7, 2);
    CHECK(r74.status == OracleStatus::Infeasible);
}

TEST_CASE("feasible instances yield verified minimal witnesses") {
    OracleResult r63 = oracle_search(Instance{6, 3}, 6);
    REQUIRE(r63.status == OracleStatus::Feasible);
    CHECK(r63.min_length == 2);
    REQUIRE(r63.witness.has_value());
    CHECK(r63.witness->length() == 2);
    CHECK(verify(*r63.witness).valid);
    CHECK(brute_force_check(*r63.witness).valid);

    OracleResult r84 = oracle_search(Instance{8, 4}, 8);
    REQUIRE(r84.status == OracleStatus::Feasible);
    CHECK(r84.min_length == 2);
    CHECK(verify(*r84.witness).valid);

    OracleResult r85 = oracle_search(Instance{8, 5}, 8);
    REQUIRE(r85.status == OracleStatus::Feasible);
    CHECK(r85.min_length == 3);
    CHECK(verify(*r85.witness).valid);

    OracleResult r96 = oracle_search(Instance{9, 6}, 9);
    REQUIRE(r96.status == OracleStatus::Feasible);
    CHECK(r96.min_length == 2);
}

TEST_CASE("iterative deepening is monotone in max_dim") {
    OracleResult shallow = oracle_search(Instance{6, 3}, 2);
    REQUIRE(shallow.status == OracleStatus::Feasible);
    CHECK(shallow.min_length == 2);
    OracleResult deep = oracle_search(Instance{6, 3}, 6);
    CHECK(deep.min_length == shallow.min_length);
    // Deterministic witness regardless of job count.
    OracleResult jobs = oracle_search(Instance{6, 3}, 6, 4);
    REQUIRE(jobs.witness.has_value());
    CHECK(generator(*jobs.witness) == generator(*deep.witness));
}

TEST_CASE("a shallow cutoff that finds nothing reports Unknown") {
    OracleResult r = oracle_search(Instance{7, 4}, 1);
    CHECK(r.status == OracleStatus::Unknown);
    CHECK(r.searched_up_to_dim == 1);
    CHECK_FALSE(r.min_length.has_value());
}

TEST_CASE("the capacity guard rejects large m") {
    CHECK_THROWS_AS(oracle_search(Instance{11, 5}, 5), capacity_error);
    CHECK_THROWS_AS(oracle_search(Instance{26, 6}, 3), capacity_error);
}

TEST_CASE("oracle minima sit between the floor and the constructed length") {
    // Small feasible instances where both the oracle and the builder run;
    // iterative deepening stops at the (small) optimum so these stay fast.
    for (auto [m, s] : std::vector<std::pair<int, int>>{
             {6, 3}, {8, 4}, {8, 5}, {9, 6}}) {
        OracleResult r = oracle_search(Instance{m, s}, m);
        REQUIRE(r.status == OracleStatus::Feasible);
        CHECK(*r.min_length <= build(Instance{m, s}).scheme.length());
        double bound = converse_bound(Instance{m, s});
        CHECK((double)*r.min_length >= bound - 1e-9);
    }
}

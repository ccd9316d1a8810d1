#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "packcolor/certificate.hpp"
#include "packcolor/exact.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/packing.hpp"
#include "packcolor/rng.hpp"

using namespace packcolor;

TEST_CASE("schedule parsing") {
    CHECK(PackingSchedule::parse("1,1,2,2") == PackingSchedule{1, 1, 2, 2});
    CHECK(PackingSchedule::parse("1^2,2^3") == PackingSchedule{1, 1, 2, 2, 2});
    CHECK(PackingSchedule::parse(" 1, 2^5 ") == PackingSchedule{1, 2, 2, 2, 2, 2});
    CHECK(PackingSchedule::consecutive(5) == PackingSchedule{1, 2, 3, 4, 5});
    CHECK(PackingSchedule{1, 1, 2, 2}.to_string() == "1^2,2^2");
    CHECK(PackingSchedule{1, 2, 3}.to_string() == "1,2,3");
    CHECK_THROWS_AS((void)PackingSchedule::parse(""), std::invalid_argument);
    CHECK_THROWS_AS((void)PackingSchedule::parse("2,1"), std::invalid_argument);
    CHECK_THROWS_AS((void)PackingSchedule::parse("0,1"), std::invalid_argument);
    CHECK_THROWS_AS((void)PackingSchedule::parse("1,x"), std::invalid_argument);
}

TEST_CASE("verify examples") {
    Graph c5 = cycle_graph(5);
    auto ok = PackingColoring::from_classes({1, 1, 2}, 5, {{0, 2}, {1, 3}, {4}});
    CHECK_FALSE(verify(c5, ok).has_value());
    CHECK(describe(verify(c5, ok)) == "Valid");

    Graph p3 = path_graph(3);
    PackingColoring bad({1, 1}, {1, 1, 2});
    auto v = verify(p3, bad);
    REQUIRE(v.has_value());
    CHECK(*v == Violation{1, 0, 1, 1});

    PackingColoring k4({1, 1, 2, 2}, {1, 2, 3, 4});
    CHECK_FALSE(verify(complete_graph(4), k4).has_value());
    CHECK(oracle::valid_coloring(complete_graph(4), k4));

    PackingColoring partial({1, 1}, {1, 0, 2});
    CHECK_THROWS_AS((void)verify(p3, partial), std::invalid_argument);
    PackingColoring wrong_order({1, 1}, {1, 2});
    CHECK_THROWS_AS((void)verify(p3, wrong_order), std::invalid_argument);
}

TEST_CASE("verify reports the first violation in class then pair order") {
    // class 2 (s=2) pair (0,2) and class 1 pair (3,4) both violate.
    Graph p5 = path_graph(5);
    PackingColoring c({1, 2}, {2, 1, 2, 1, 1});
    auto v = verify(p5, c);
    REQUIRE(v.has_value());
    CHECK(*v == Violation{1, 3, 4, 1});
}

TEST_CASE("verify agrees with the all-pairs oracle") {
    Rng rng(3);
    for (const Graph& g : enumerate_connected_subcubic(6)) {
        for (int trial = 0; trial < 5; ++trial) {
            PackingSchedule s{1, 1, 2, 3};
            std::vector<int> cls(g.order());
            for (int& x : cls) x = 1 + static_cast<int>(rng.below(4));
            PackingColoring c(s, cls);
            CHECK(verify(g, c).has_value() == !oracle::valid_coloring(g, c));
        }
    }
}

TEST_CASE("exact solver examples") {
    Graph p = petersen_graph();
    CHECK(solve_exact(p, {1, 1, 2, 2}).status == SolveStatus::Unsat);
    CHECK(solve_exact(p, {1, 2, 2, 2, 2, 2}).status == SolveStatus::Unsat);
    for (PackingSchedule s : {PackingSchedule{1, 1, 2, 2, 3}, PackingSchedule{1, 1, 2, 2, 2}}) {
        auto out = solve_exact(p, s);
        REQUIRE(out.status == SolveStatus::Sat);
        CHECK(oracle::valid_coloring(p, *out.coloring));
    }
    CHECK(solve_exact(Graph(1), {1}).status == SolveStatus::Sat);
    CHECK(solve_exact(p, {1, 1, 2, 2}, 10).status == SolveStatus::BudgetExceeded);
}

TEST_CASE("naive solver examples") {
    CHECK(naive_solve(path_graph(4), {1, 2}).status == SolveStatus::Unsat);
    CHECK(naive_solve(path_graph(4), {1, 2, 3}).status == SolveStatus::Sat);
    CHECK(naive_solve(complete_graph(2), {1, 1}).status == SolveStatus::Sat);
    CHECK_THROWS_AS((void)naive_solve(petersen_graph(), {1, 2, 3, 4, 5, 6, 7, 8}), UnsupportedError);
}

TEST_CASE("exact agrees with naive on small graphs") {
    const std::vector<PackingSchedule> schedules{{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3}, {1, 1, 2, 2}, {1, 1, 2, 3}};
    for (const Graph& g : enumerate_connected_subcubic(5)) {
        for (const auto& s : schedules) {
            auto fast = solve_exact(g, s);
            auto slow = naive_solve(g, s);
            CHECK(fast.status == slow.status);
            if (fast.coloring) CHECK(oracle::valid_coloring(g, *fast.coloring));
        }
    }
}

TEST_CASE("packing chromatic number examples") {
    CHECK(pcn(Graph(1), 5).value == 1);
    CHECK(pcn(complete_graph(2), 5).value == 2);
    CHECK(pcn(path_graph(4), 5).value == 3);
    CHECK(pcn(cycle_graph(4), 5).value == 3);
    CHECK(pcn(petersen_graph(), 12).value == 7);
    auto capped = pcn(petersen_graph(), 4);
    CHECK_FALSE(capped.value.has_value());
    CHECK(capped.per_k.size() == 4);
    auto r = pcn(cycle_graph(4), 5);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->schedule() == PackingSchedule::consecutive(3));
}

TEST_CASE("exact solver is deterministic") {
    Graph g = generate_random_cubic(14, 9);
    auto a = solve_exact(g, {1, 1, 2, 2});
    auto b = solve_exact(g, {1, 1, 2, 2});
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    CHECK(a.coloring == b.coloring);
}

TEST_CASE("satisfiable schedules stay satisfiable when relaxed") {
    for (const Graph& g : enumerate_connected_subcubic(6)) {
        auto base = solve_exact(g, {1, 1, 2, 3});
        if (base.status != SolveStatus::Sat) continue;
        CHECK(solve_exact(g, {1, 1, 2, 3, 3}).status == SolveStatus::Sat);
        CHECK(solve_exact(g, {1, 1, 2, 2}).status == SolveStatus::Sat);
        CHECK(solve_exact(g, {1, 1, 1, 3}).status == SolveStatus::Sat);
    }
}

TEST_CASE("certificate json round-trip") {
    Graph k4 = complete_graph(4);
    PackingColoring c({1, 1, 2, 2}, {1, 2, 3, 4});
    auto doc = certificate_json(k4, c);
    CHECK(doc["valid"] == true);
    CHECK(doc["schedule"] == nlohmann::json::array({1, 1, 2, 2}));
    CHECK(doc["classes"][0] == nlohmann::json::array({0}));
    CHECK(coloring_from_json(doc, 4) == c);

    PackingColoring bad({1, 1, 2, 2}, {1, 1, 3, 4});
    CHECK(certificate_json(k4, bad)["valid"] == false);
    CHECK_THROWS_AS((void)coloring_from_json(nlohmann::json::object(), 4), std::invalid_argument);
    auto dup = doc;
    dup["classes"][1].push_back(0);
    CHECK_THROWS_AS((void)coloring_from_json(dup, 4), std::invalid_argument);
}

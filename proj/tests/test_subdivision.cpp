#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "packcolor/certificate.hpp"
#include "packcolor/corpus.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/lift.hpp"

using namespace packcolor;

namespace {

void check_class_budget(const SubdivisionMap& m, const PackingColoring& c) {
    for (Vertex s = 0; s < static_cast<Vertex>(m.subdivided().order()); ++s) {
        if (m.is_midpoint(s)) {
            CHECK(c.class_of(s) == 1);
        } else {
            CHECK(c.class_of(s) >= 2);
            CHECK(c.class_of(s) <= 5);
        }
    }
}

}  // namespace

TEST_CASE("lifting K2 gives the colored path on three vertices") {
    SubdivisionMap m = subdivide(complete_graph(2));
    PackingColoring c({1, 1, 2, 2}, {1, 2});
    LiftedColoring lifted = lift_coloring(m, c);
    CHECK(lifted.map == &m);
    CHECK(lifted.coloring.schedule() == subdivision_schedule());
    CHECK(lifted.coloring.assignment() == std::vector<int>{2, 3, 1});
    CHECK(oracle::valid_coloring(m.subdivided(), lifted.coloring));
}

TEST_CASE("lifting K4") {
    Graph k4 = complete_graph(4);
    SubdivisionMap m = subdivide(k4);
    auto res = solve_1122(k4);
    REQUIRE(res.coloring.has_value());
    LiftedColoring lifted = lift_coloring(m, *res.coloring);
    CHECK(oracle::valid_coloring(m.subdivided(), lifted.coloring));
    check_class_budget(m, lifted.coloring);
    for (Vertex v = 0; v < 4; ++v) CHECK(lifted.coloring.class_of(v) == res.coloring->class_of(v) + 1);
}

TEST_CASE("lift rejects invalid sources") {
    Graph k4 = complete_graph(4);
    SubdivisionMap m = subdivide(k4);
    CHECK_THROWS_AS((void)lift_coloring(m, PackingColoring({1, 1, 2, 2}, {1, 1, 3, 4})), PreconditionError);
    CHECK_THROWS_AS((void)lift_coloring(m, PackingColoring({1, 2, 3, 4}, {1, 2, 3, 4})), PreconditionError);
}

TEST_CASE("lifted certificate lineage") {
    SubdivisionMap m = subdivide(path_graph(3));
    LiftedColoring lifted = lift_coloring(m, PackingColoring({1, 1, 2, 2}, {1, 2, 1}));
    auto doc = lifted_certificate_json(m, lifted.coloring);
    CHECK(doc["valid"] == true);
    REQUIRE(doc["lineage"].size() == 5);
    CHECK(doc["lineage"][0] == nlohmann::json{{"original", 0}});
    CHECK(doc["lineage"][3] == nlohmann::json{{"midpoint", {0, 1}}});
    CHECK(doc["lineage"][4] == nlohmann::json{{"midpoint", {1, 2}}});
}

TEST_CASE("subdivision pipeline on small graphs") {
    {
        SubdivisionMap m = subdivide(Graph(1));
        auto out = pcn5_subdivision(m);
        REQUIRE(out.status == SubdivisionStatus::Colored);
        CHECK(out.coloring->assignment().size() == 1);
        CHECK(oracle::valid_coloring(m.subdivided(), *out.coloring));
    }
    {
        SubdivisionMap m = subdivide(cycle_graph(6));
        auto out = pcn5_subdivision(m);
        REQUIRE(out.status == SubdivisionStatus::Colored);
        CHECK(out.petersen_components == 0);
        CHECK(oracle::valid_coloring(m.subdivided(), *out.coloring));
        check_class_budget(m, *out.coloring);
    }
    for (const Graph& g : enumerate_connected_subcubic(6)) {
        SubdivisionMap m = subdivide(g);
        auto out = pcn5_subdivision(m);
        REQUIRE(out.status == SubdivisionStatus::Colored);
        CHECK(oracle::valid_coloring(m.subdivided(), *out.coloring));
        check_class_budget(m, *out.coloring);
    }
}

TEST_CASE("subdivided Petersen graph is colored by exact search") {
    SubdivisionMap m = subdivide(petersen_graph());
    auto out = pcn5_subdivision(m);
    REQUIRE(out.status == SubdivisionStatus::Colored);
    CHECK(out.petersen_components == 1);
    CHECK(out.exact_nodes > 0);
    CHECK(oracle::valid_coloring(m.subdivided(), *out.coloring));
    CHECK(out.coloring->schedule() == subdivision_schedule());

    auto starved = pcn5_subdivision(m, 5);
    CHECK(starved.status == SubdivisionStatus::BudgetExceeded);
    CHECK_FALSE(starved.coloring.has_value());
}

TEST_CASE("cached Petersen subdivision witness still verifies") {
    std::ifstream file(PACKCOLOR_FIXTURE_DIR "/petersen_subdivision_coloring.json");
    REQUIRE(file.good());
    auto doc = nlohmann::json::parse(file);
    SubdivisionMap m = subdivide(petersen_graph());
    CHECK(doc["graph6"] == emit_graph6(m.subdivided()));
    CHECK(doc["valid"] == true);
    PackingColoring c = coloring_from_json(doc, m.subdivided().order());
    CHECK(c.schedule() == subdivision_schedule());
    CHECK_FALSE(verify(m.subdivided(), c).has_value());
    CHECK(oracle::valid_coloring(m.subdivided(), c));
}

TEST_CASE("disconnected graphs mix exact and lifted components") {
    std::vector<Edge> es = petersen_graph().edges();
    for (const Edge& e : cycle_graph(5).edges()) es.push_back({e.u + 10, e.v + 10});
    Graph g(15, es);
    SubdivisionMap m = subdivide(g);
    auto out = pcn5_subdivision(m);
    REQUIRE(out.status == SubdivisionStatus::Colored);
    CHECK(out.petersen_components == 1);
    CHECK(oracle::valid_coloring(m.subdivided(), *out.coloring));
}

TEST_CASE("lifts of random cubic graphs") {
    for (const Graph& g : random_cubic_corpus(40, 10, 30, 8)) {
        SubdivisionMap m = subdivide(g);
        auto out = pcn5_subdivision(m);
        REQUIRE(out.status == SubdivisionStatus::Colored);
        CHECK_FALSE(verify(m.subdivided(), *out.coloring).has_value());
        if (!is_petersen(g)) check_class_budget(m, *out.coloring);
    }
}

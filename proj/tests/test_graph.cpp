#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "packcolor/distance.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/rng.hpp"
#include "packcolor/subdivision.hpp"

using namespace packcolor;

namespace {

// Outer 5-cycle, spokes, inner pentagram.
Graph reference_petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph(10, es);
}

std::vector<Graph> small_random_subcubic(std::size_t count, std::uint64_t seed) {
    std::vector<Graph> out;
    Rng rng(seed);
    while (out.size() < count) {
        std::size_t n = 2 + rng.below(11);
        std::vector<Edge> es;
        std::vector<int> deg(n, 0);
        for (int tries = 0; tries < 3 * static_cast<int>(n); ++tries) {
            auto u = static_cast<Vertex>(rng.below(n));
            auto v = static_cast<Vertex>(rng.below(n));
            if (u == v) continue;
            Edge e{std::min(u, v), std::max(u, v)};
            if (std::find(es.begin(), es.end(), e) != es.end()) continue;
            if (deg[static_cast<std::size_t>(u)] == 3 || deg[static_cast<std::size_t>(v)] == 3) continue;
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            es.push_back(e);
        }
        out.emplace_back(n, es);
    }
    return out;
}

}  // namespace

TEST_CASE("graph rejects loops, parallel edges and bad ids") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    Graph g(3, {{2, 0}, {1, 2}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK_THROWS_AS((void)g.neighbors(3), std::out_of_range);
}

TEST_CASE("graph6 decodes reference strings") {
    Graph empty5 = parse_graph6("D??");
    CHECK(empty5.order() == 5);
    CHECK(empty5.size() == 0);

    Graph p = parse_graph6("IheA@GUAo");
    CHECK(p == reference_petersen());
    CHECK(p.is_regular(3));

    CHECK(parse_graph6(">>graph6<<Bg\n") == path_graph(3));
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 encodes reference strings") {
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(path_graph(3)) == "Bg");
    CHECK(emit_graph6(complete_graph(4)) == "C~");
    CHECK(emit_graph6(reference_petersen()) == "IheA@GUAo");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
    std::string long_path = emit_graph6(path_graph(64));
    CHECK(long_path.substr(0, 10) == "~?@?hCGGC@");
    CHECK(parse_graph6(long_path) == path_graph(64));
}

TEST_CASE("graph6 round-trips the enumeration") {
    for (const Graph& g : enumerate_connected_subcubic(7)) {
        std::string s = emit_graph6(g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 parse errors carry offsets") {
    try {
        (void)parse_graph6("C~x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS((void)parse_graph6(""), ParseError);
    CHECK_THROWS_AS((void)parse_graph6("C\x7f"), ParseError);
    CHECK_THROWS_AS((void)parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS((void)emit_graph6(Graph(kGraph6MaxOrder + 1)), UnsupportedError);
}

TEST_CASE("edge lists accept numeric ids and labels") {
    auto numeric = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(numeric.graph == path_graph(3));
    auto named = parse_edge_list("3 2\na b\nb c\n");
    CHECK(named.graph == path_graph(3));
    CHECK(named.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK_THROWS_AS((void)parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK(parse_edge_list(emit_edge_list(reference_petersen())).graph == reference_petersen());

    auto many = parse_graph_text("Bg\nC~\n");
    REQUIRE(many.size() == 2);
    CHECK(many[1] == complete_graph(4));
    std::istringstream in("Bg\n\nDhc\n");
    CHECK(read_graph6_stream(in).size() == 2);
}

TEST_CASE("distance examples") {
    Graph p4 = path_graph(4);
    CHECK(distance(p4, 0, 0) == 0);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(Graph(2), 0, 1) == kUnreachable);
    CHECK_THROWS((void)distance(p4, 0, 4));

    Graph p = petersen_graph();
    for (Vertex u = 0; u < 10; ++u)
        for (Vertex v = 0; v < 10; ++v) CHECK(distance(p, u, v) <= 2);

    CHECK(ball(p4, 0, 2) == std::vector<Vertex>{1, 2});
    std::vector<Vertex> a{0}, b{2, 3};
    CHECK(set_distance(p4, a, b) == 2);
}

TEST_CASE("distances agree with Floyd-Warshall and obey the metric axioms") {
    for (const Graph& g : small_random_subcubic(60, 11)) {
        auto d = oracle::floyd_warshall(g);
        DistanceOracle bounded(g, 0);
        DistanceOracle table(g);
        const auto n = static_cast<Vertex>(g.order());
        for (Vertex u = 0; u < n; ++u) {
            auto row = bfs_distances(g, u);
            for (Vertex v = 0; v < n; ++v) {
                int expect = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                Distance got = row[static_cast<std::size_t>(v)];
                CHECK((expect >= oracle::kInf ? got == kUnreachable : got == expect));
                CHECK(table(u, v) == got);
                CHECK(bounded(u, v) == got);
                CHECK(bounded.within(u, v, 2) == (got <= 2));
                CHECK(row[static_cast<std::size_t>(v)] == bfs_distances(g, v)[static_cast<std::size_t>(u)]);
                if (got == kUnreachable) continue;
                for (Vertex w = 0; w < n; ++w) {
                    Distance a = distance(g, u, w);
                    Distance b = distance(g, w, v);
                    if (a != kUnreachable && b != kUnreachable) CHECK(got <= a + b);
                }
            }
        }
    }
}

TEST_CASE("girth") {
    CHECK(girth(path_graph(6)) == kUnreachable);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(girth(petersen_graph()) == 5);
    CHECK(girth(named_graph("k33")) == 4);
    CHECK(girth(prism_graph(5)) == 4);
    CHECK(girth(cycle_graph(7)) == 7);
}

TEST_CASE("subdivision shape and distance doubling") {
    SubdivisionMap k2 = subdivide(complete_graph(2));
    CHECK(oracle::isomorphic(k2.subdivided(), path_graph(3)));
    CHECK(k2.midpoint(0, 1) == 2);
    CHECK(k2.midpoint(1, 0) == 2);
    CHECK(k2.edge_of(2) == Edge{0, 1});
    CHECK_FALSE(k2.edge_of(0).has_value());

    SubdivisionMap pm = subdivide(petersen_graph());
    CHECK(pm.subdivided().order() == 25);
    CHECK(pm.subdivided().size() == 30);
    for (Vertex s = 10; s < 25; ++s) {
        CHECK(pm.is_midpoint(s));
        CHECK(pm.subdivided().degree(s) == 2);
    }

    for (const Graph& g : small_random_subcubic(50, 5)) {
        SubdivisionMap m = subdivide(g);
        const auto n = static_cast<Vertex>(g.order());
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                Distance dg = distance(g, u, v);
                Distance ds = distance(m.subdivided(), m.image(u), m.image(v));
                CHECK((dg == kUnreachable ? ds == kUnreachable : ds == 2 * dg));
            }
    }
}

TEST_CASE("generators") {
    CHECK(oracle::isomorphic(generate_random_cubic(4, 1), complete_graph(4)));
    for (std::size_t n : {6, 10, 16, 30}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            Graph g = generate_random_cubic(n, seed);
            CHECK(g.order() == n);
            CHECK(g.is_regular(3));
            CHECK(is_connected(g));
            CHECK(emit_graph6(g) == emit_graph6(generate_random_cubic(n, seed)));
        }
    }
    CHECK(cycle_graph(5).size() == 5);
    CHECK(cycle_graph(5).is_regular(2));
    Graph k33 = named_graph("k33");
    CHECK(is_bipartite(k33));
    CHECK(k33.is_regular(3));
    CHECK(named_graph("prism:5") == prism_graph(5));
    CHECK(named_graph("cycle(6)") == cycle_graph(6));
    CHECK_THROWS_AS((void)named_graph("dodecahedron"), std::invalid_argument);
}

TEST_CASE("petersen recognition matches explicit isomorphism") {
    Graph ref = reference_petersen();
    CHECK(is_petersen(named_graph("petersen")));
    CHECK_FALSE(is_petersen(prism_graph(5)));
    CHECK_FALSE(is_petersen(complete_graph(4)));
    std::vector<Graph> cubic10;
    for (std::uint64_t seed = 0; seed < 40; ++seed) cubic10.push_back(generate_random_cubic(10, seed));
    cubic10.push_back(prism_graph(5));
    cubic10.push_back(petersen_graph());
    std::vector<Vertex> perm{3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
    cubic10.push_back(relabel(ref, perm));
    int hits = 0;
    for (const Graph& g : cubic10) {
        bool iso = oracle::isomorphic(g, ref);
        CHECK(is_petersen(g) == iso);
        hits += iso;
    }
    CHECK(hits >= 2);
}

TEST_CASE("canonical form is a labelling invariant matching brute force ranks") {
    for (const Graph& g : enumerate_connected_subcubic(6)) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::reverse(perm.begin(), perm.end());
        Graph h = relabel(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        // Same minimum adjacency string as the literal next_permutation search.
        Graph c = parse_graph6(canonical_form(g));
        CHECK(oracle::brute_canonical(c) == oracle::brute_canonical(g));
        CHECK(oracle::isomorphic(c, g));
    }
}

TEST_CASE("enumeration counts and coverage") {
    CHECK(enumerate_connected_subcubic(2).size() == 2);
    auto three = enumerate_connected_subcubic(3);
    CHECK(three.size() == 4);
    CHECK_THROWS_AS((void)enumerate_connected_subcubic(9), UnsupportedError);

    auto upto6 = enumerate_connected_subcubic(6);
    std::map<std::size_t, std::set<std::string>> mine;
    for (const Graph& g : upto6) {
        CHECK(is_connected(g));
        CHECK(g.is_subcubic());
        auto [it, fresh] = mine[g.order()].insert(oracle::brute_canonical(g));
        CHECK(fresh);
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        auto naive = oracle::naive_connected_subcubic(n);
        CHECK(mine[n] == naive);
    }

    std::set<std::string> forms;
    std::size_t total = 0;
    for (const Graph& g : enumerate_connected_subcubic(8)) {
        forms.insert(canonical_form(g));
        ++total;
    }
    CHECK(forms.size() == total);
    CHECK(total == 307);
}

// One PASS/FAIL line per acceptance criterion, followed by the measurements
// behind it. Exit status is non-zero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "packcolor/auxiliary.hpp"
#include "packcolor/certificate.hpp"
#include "packcolor/constructive.hpp"
#include "packcolor/corpus.hpp"
#include "packcolor/distance.hpp"
#include "packcolor/exact.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/lift.hpp"
#include "packcolor/rng.hpp"
#include "packcolor/subdivision.hpp"

using namespace packcolor;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << '\n';
    std::istringstream lines(detail);
    for (std::string line; std::getline(lines, line);) std::cout << "    " << line << '\n';
    if (!ok) ++failures;
}

bool verified(const Graph& g, const PackingColoring& c) {
    return !verify(g, c).has_value() && oracle::valid_coloring(g, c);
}

constexpr std::uint64_t kRandomCorpusSeed = 2024;
constexpr std::size_t kRandomCorpusSize = 500;

std::vector<Graph> small_corpus() { return enumerate_connected_subcubic(8); }
std::vector<Graph> random_corpus() { return random_cubic_corpus(kRandomCorpusSize, 10, 24, kRandomCorpusSeed); }

void criterion_1(const std::vector<Graph>& graphs) {
    auto t0 = Clock::now();
    std::map<std::size_t, std::set<std::string>> mine;
    for (const Graph& g : graphs)
        if (g.order() <= 6) mine[g.order()].insert(oracle::brute_canonical(g));
    bool enumeration_ok = true;
    std::ostringstream d;
    d << "orders 1..6, enumerator vs naive:";
    for (std::size_t n = 1; n <= 6; ++n) {
        auto naive = oracle::naive_connected_subcubic(n);
        enumeration_ok = enumeration_ok && naive == mine[n];
        d << ' ' << mine[n].size() << '/' << naive.size();
    }
    d << '\n';

    int colored = 0, bad = 0;
    for (const Graph& g : graphs) {
        auto r = solve_1122(g);
        if (r.status == ConstructiveStatus::Colored && verified(g, *r.coloring)) {
            ++colored;
        } else {
            ++bad;
            d << "failed: " << emit_graph6(g) << '\n';
        }
    }
    double secs = seconds_since(t0);
    d << "graphs: " << graphs.size() << ", colored and verified: " << colored << ", failures: " << bad
      << ", time: " << secs << " s (limit 300 s)";
    report(1, enumeration_ok && bad == 0 && secs < 300,
           "every connected subcubic graph with n <= 8 gets a verified (1,1,2,2)-coloring", d.str());
}

void exact_unsat(int id, const PackingSchedule& s, const std::string& title) {
    auto t0 = Clock::now();
    auto r = solve_exact(petersen_graph(), s, kDefaultNodeBudget);
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << "schedule " << s.to_string() << ": " << to_string(r.status) << " after " << r.nodes << " nodes, " << secs
      << " s (limit 60 s)";
    report(id, r.status == SolveStatus::Unsat && secs < 60, title, d.str());
}

void criterion_4() {
    bool ok = true;
    std::ostringstream d;
    Graph p = petersen_graph();
    for (PackingSchedule s : {PackingSchedule{1, 1, 2, 2, 2}, PackingSchedule{1, 1, 2, 2, 3}}) {
        auto t0 = Clock::now();
        auto r = solve_exact(p, s, kDefaultNodeBudget);
        double secs = seconds_since(t0);
        bool good = r.status == SolveStatus::Sat && verified(p, *r.coloring) &&
                    certificate_json(p, *r.coloring)["valid"] == true && secs < 10;
        ok = ok && good;
        d << "schedule " << s.to_string() << ": " << to_string(r.status) << ", certificate "
          << (good ? "verifies" : "does not verify") << ", " << r.nodes << " nodes, " << secs << " s (limit 10 s)\n";
    }
    report(4, ok, "Petersen graph has packing (1,1,2,2,2)- and (1,1,2,2,3)-colorings", d.str());
}

void criterion_5(const std::vector<Graph>& graphs) {
    auto t0 = Clock::now();
    int colored = 0, petersen = 0, bad = 0, max_restarts = 0;
    std::map<int, int> histogram;
    std::ostringstream d;
    for (const Graph& g : graphs) {
        ConstructiveOptions opt;
        opt.restarts = 64;
        auto r = solve_1122(g, opt);
        if (r.status == ConstructiveStatus::Petersen && is_petersen(g)) {
            ++petersen;
        } else if (r.status == ConstructiveStatus::Colored && verified(g, *r.coloring)) {
            ++colored;
            ++histogram[r.stats.restarts_used];
            max_restarts = std::max(max_restarts, r.stats.restarts_used);
        } else {
            ++bad;
            d << "failed: " << emit_graph6(g) << '\n';
        }
    }
    double secs = seconds_since(t0);
    d << "graphs: " << graphs.size() << " (seed " << kRandomCorpusSeed << ", even n in 10..24), colored: " << colored
      << ", Petersen: " << petersen << ", failures: " << bad << ", time: " << secs << " s (limit 600 s)\n";
    d << "restart histogram (restarts used -> graphs):";
    for (auto [k, v] : histogram) d << ' ' << k << "->" << v;
    report(5, bad == 0 && max_restarts <= 64 && secs < 600,
           "random cubic corpus is fully colored within 64 restarts", d.str());
}

void criterion_6(const std::vector<Graph>& small, const std::vector<Graph>& random) {
    auto t0 = Clock::now();
    int lifted = 0, bad = 0;
    std::ostringstream d;
    for (const auto* corpus : {&small, &random}) {
        for (const Graph& g : *corpus) {
            if (is_petersen(g)) continue;
            SubdivisionMap m = subdivide(g);
            auto r = solve_1122(g);
            bool ok = r.coloring.has_value();
            if (ok) {
                LiftedColoring lc = lift_coloring(m, *r.coloring);
                ok = verified(m.subdivided(), lc.coloring) && lc.coloring.schedule() == subdivision_schedule();
                for (Vertex s = 0; ok && s < static_cast<Vertex>(m.subdivided().order()); ++s)
                    ok = m.is_midpoint(s) == (lc.coloring.class_of(s) == 1);
            }
            ok ? ++lifted : ++bad;
        }
    }
    d << "lifted and verified: " << lifted << ", failures: " << bad << ", time: " << seconds_since(t0) << " s\n";

    SubdivisionMap pm = subdivide(petersen_graph());
    auto t1 = Clock::now();
    auto exact = solve_exact(pm.subdivided(), subdivision_schedule(), kDefaultNodeBudget);
    double secs = seconds_since(t1);
    bool petersen_ok = exact.status == SolveStatus::Sat && verified(pm.subdivided(), *exact.coloring);
    d << "S(Petersen), 25 vertices: " << to_string(exact.status) << " after " << exact.nodes
      << " nodes (budget 1e8), " << secs << " s\n";

    bool fixture_ok = false;
    std::ifstream file(PACKCOLOR_FIXTURE_DIR "/petersen_subdivision_coloring.json");
    if (file) {
        try {
            auto doc = nlohmann::json::parse(file);
            auto cached = coloring_from_json(doc, pm.subdivided().order());
            fixture_ok = doc["graph6"] == emit_graph6(pm.subdivided()) && cached.schedule() == subdivision_schedule() &&
                         verified(pm.subdivided(), cached);
        } catch (const std::exception& e) {
            d << "fixture unreadable: " << e.what() << '\n';
        }
    }
    d << "cached witness " << (fixture_ok ? "verifies" : "missing or invalid");
    report(6, bad == 0 && petersen_ok && fixture_ok,
           "subdivisions of all corpus graphs and of Petersen get verified (1,2,3,4,5)-colorings", d.str());
}

void criterion_7() {
    const std::vector<PackingSchedule> schedules{{1, 1}, {1, 2}, {1, 1, 2}, {1, 2, 3}, {1, 1, 2, 2}, {1, 1, 2, 3}};
    int agree = 0, total = 0, sat = 0;
    std::ostringstream d;
    for (const Graph& g : enumerate_connected_subcubic(6)) {
        for (const auto& s : schedules) {
            auto fast = solve_exact(g, s);
            auto slow = naive_solve(g, s);
            ++total;
            bool sound = !fast.coloring || verified(g, *fast.coloring);
            if (fast.status == slow.status && sound) {
                ++agree;
            } else {
                d << "disagree: " << emit_graph6(g) << " " << s.to_string() << '\n';
            }
            sat += fast.status == SolveStatus::Sat;
        }
    }
    d << "agreement " << agree << "/" << total << " (" << sat << " SAT)";
    report(7, agree == total, "exact solver agrees with exhaustive enumeration for n <= 6", d.str());
}

void criterion_8(const std::vector<Graph>& small, const std::vector<Graph>& random) {
    auto t0 = Clock::now();
    long states = 0, violations = 0;
    int failed = 0;
    nlohmann::json witness;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        for (const auto* corpus : {&small, &random}) {
            CorpusOptions opt;
            opt.solver.seed = seed;
            opt.check_invariants = true;
            CorpusReport r = run_corpus(*corpus, opt);
            states += r.states_checked;
            violations += r.invariant_violations;
            failed += static_cast<int>(r.failures.size());
            for (const auto& rec : r.records) {
                if (witness.is_null() && !rec.first_violation.is_null()) {
                    witness = {{"graph6", rec.graph6}, {"seed", seed}, {"report", rec.first_violation}};
                }
            }
        }
    }
    std::ostringstream d;
    d << "solver seeds 0..15 over both corpora: " << states << " fixed-point states checked, " << violations
      << " violations, " << failed << " solver failures, " << seconds_since(t0) << " s";
    if (!witness.is_null()) d << "\nfirst violation: " << witness.dump();
    report(8, states >= 10000 && violations == 0 && failed == 0,
           "invariant battery is clean on every fixed point reached (>= 1e4 states)", d.str());
}

void criterion_9() {
    std::ostringstream d;
    Rng rng(909);

    // Distance doubling on 100 graphs: cubic ones and subcubic edge-deleted copies.
    int pairs = 0, doubling_bad = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        Graph g = generate_random_cubic(8 + 2 * (i % 12), mix_seed(9, i));
        if (i % 2) {
            auto es = g.edges();
            es.erase(es.begin() + static_cast<std::ptrdiff_t>(rng.below(es.size())));
            es.erase(es.begin() + static_cast<std::ptrdiff_t>(rng.below(es.size())));
            g = Graph(g.order(), es);
        }
        SubdivisionMap m = subdivide(g);
        auto dg = oracle::floyd_warshall(g);
        for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
            auto ds = bfs_distances(m.subdivided(), m.image(u));
            for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
                int expect = dg[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                Distance got = ds[static_cast<std::size_t>(m.image(v))];
                bool ok = expect >= oracle::kInf ? got == kUnreachable : got == 2 * expect;
                doubling_bad += !ok;
                ++pairs;
            }
        }
    }
    d << "distance doubling: " << pairs << " ordered pairs on 100 graphs, " << doubling_bad << " mismatches\n";

    // 1e4 random switches: score preserved, reverse switch restores the state.
    int switches = 0, switch_bad = 0;
    for (std::uint64_t gi = 0; switches < 10000; ++gi) {
        Graph g = generate_random_cubic(10 + 2 * (gi % 10), mix_seed(99, gi));
        PartitionState s = initial_partition(g, gi);
        for (int attempt = 0; attempt < 2000 && switches < 10000; ++attempt) {
            auto blacks = s.members(rng.below(2) ? Side::One : Side::Two);
            if (blacks.empty()) continue;
            Vertex u = blacks[rng.below(blacks.size())];
            std::vector<Vertex> options;
            for (Vertex w : g.neighbors(u))
                if (s.is_red(w) && can_switch(s, u, w)) options.push_back(w);
            if (options.empty()) continue;
            Vertex v = options[rng.below(options.size())];
            PartitionState t = apply_switch(s, u, v);
            bool ok = t.is_valid() && t.black_count() == s.black_count() &&
                      t.members(Side::One).size() == s.members(Side::One).size() && can_switch(t, v, u) &&
                      apply_switch(t, v, u) == s;
            switch_bad += !ok;
            ++switches;
            s = std::move(t);
        }
    }
    d << "switches: " << switches << ", involution or score failures: " << switch_bad << '\n';

    // 1e3-step fuzz of incremental H updates against full rebuilds.
    Graph g = generate_random_cubic(40, 4242);
    PartitionState s = initial_partition(g, 1);
    AuxiliaryGraph h(s);
    int steps = 0, h_bad = 0;
    for (int attempt = 0; attempt < 100000 && steps < 1000; ++attempt) {
        auto blacks = s.members(rng.below(2) ? Side::One : Side::Two);
        Vertex u = blacks[rng.below(blacks.size())];
        std::vector<Vertex> options;
        for (Vertex w : g.neighbors(u))
            if (s.is_red(w) && can_switch(s, u, w)) options.push_back(w);
        if (options.empty()) continue;
        Vertex v = options[rng.below(options.size())];
        PartitionState t = apply_switch(s, u, v);
        std::vector<Vertex> changed{u, v};
        h.update(t, changed);
        s = std::move(t);
        AuxiliaryGraph full(s);
        auto naive = oracle::naive_H(s);
        bool ok = h == full && naive.components.size() == full.components().size();
        h_bad += !ok;
        ++steps;
    }
    d << "incremental H: " << steps << " switch steps, " << h_bad << " mismatches with full rebuild";

    report(9, doubling_bad == 0 && switch_bad == 0 && h_bad == 0 && switches >= 10000 && steps >= 1000,
           "structural metamorphic properties hold", d.str());
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    const std::vector<Graph> small = small_corpus();
    const std::vector<Graph> random = random_corpus();

    criterion_1(small);
    exact_unsat(2, {1, 1, 2, 2}, "Petersen graph has no packing (1,1,2,2)-coloring (exhaustive UNSAT)");
    exact_unsat(3, {1, 2, 2, 2, 2, 2}, "Petersen graph has no packing (1,2,2,2,2,2)-coloring (exhaustive UNSAT)");
    criterion_4();
    criterion_5(random);
    criterion_6(small, random);
    criterion_7();
    criterion_8(small, random);
    criterion_9();

    std::cout << (failures == 0 ? "ALL PASS" : "SOME FAILED") << " (" << failures << " failing, "
              << seconds_since(t0) << " s total)\n";
    return failures == 0 ? 0 : 1;
}

#include "packcolor/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "packcolor/generators.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/invariants.hpp"
#include "packcolor/lift.hpp"
#include "packcolor/rng.hpp"

namespace packcolor {

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash) {
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::vector<Graph> random_cubic_corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::uint64_t seed) {
    if (n_min < 4) n_min = 4;
    if (n_min % 2 == 1) ++n_min;
    if (n_max < n_min) throw std::invalid_argument("random_cubic_corpus: empty order range");
    const std::size_t choices = (n_max - n_min) / 2 + 1;
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = mix_seed(seed, i);
        Rng rng(s);
        const std::size_t n = n_min + 2 * static_cast<std::size_t>(rng.below(choices));
        out.push_back(generate_random_cubic(n, s));
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CorpusRecord run_one(const Graph& g, const CorpusOptions& opt) {
    CorpusRecord rec;
    rec.graph6 = emit_graph6(g);
    rec.n = g.order();
    rec.m = g.size();

    ConstructiveOptions solver = opt.solver;
    std::uint64_t hash = fnv1a("");
    solver.trace = [&hash](const nlohmann::json& record) { hash = fnv1a(record.dump() + "\n", hash); };
    if (opt.check_invariants) {
        solver.on_fixed_point = [&rec](const PartitionState& s) {
            ++rec.states_checked;
            auto report = check_lemma_invariants(s);
            if (report.clean()) return;
            rec.invariant_violations += static_cast<int>(report.violations.size());
            if (rec.first_violation.is_null()) {
                rec.first_violation = report.to_json(s);
                rec.first_violation["graph6"] = rec.graph6;
            }
        };
    }

    auto t0 = Clock::now();
    ConstructiveResult res = solve_1122(g, solver);
    rec.solve_ms = millis_since(t0);
    rec.outcome = to_string(res.status);
    rec.restarts = res.stats.restarts_used;
    rec.fixed_points = res.stats.fixed_points;
    rec.trace_checksum = hash;

    if (opt.lift && res.status != ConstructiveStatus::Failed) {
        auto t1 = Clock::now();
        SubdivisionMap map(g);
        if (res.coloring) {
            auto lifted = lift_coloring(map, *res.coloring);
            rec.lift_valid = !verify(map.subdivided(), lifted.coloring);
        } else {
            // Petersen components need the exact search on the subdivision.
            auto sub = pcn5_subdivision(map, kDefaultNodeBudget, opt.solver);
            rec.lift_valid = sub.status == SubdivisionStatus::Colored;
        }
        rec.lift_ms = millis_since(t1);
    }
    return rec;
}

double percentile(std::vector<double> sorted, double q) {
    if (sorted.empty()) return 0;
    auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size()))) ;
    idx = std::clamp<std::size_t>(idx, 1, sorted.size());
    return sorted[idx - 1];
}

}  // namespace

CorpusReport run_corpus(const std::vector<Graph>& graphs, const CorpusOptions& opt) {
    CorpusReport report;
    report.records.resize(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) report.records[i] = run_one(graphs[i], opt);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(graphs.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::sort(report.records.begin(), report.records.end(), [](const CorpusRecord& a, const CorpusRecord& b) {
        return std::tie(a.n, a.m, a.graph6) < std::tie(b.n, b.m, b.graph6);
    });
    std::vector<double> times;
    for (const auto& r : report.records) {
        times.push_back(r.solve_ms);
        report.states_checked += r.states_checked;
        report.invariant_violations += r.invariant_violations;
        if (r.lift_valid) ++report.lifts_valid;
        if (r.outcome == "colored") {
            ++report.success;
            ++report.restart_histogram[r.restarts];
        } else if (r.outcome == "petersen") {
            ++report.petersen;
        } else {
            report.failures.push_back(r.graph6);
        }
    }
    std::sort(times.begin(), times.end());
    report.p50_ms = percentile(times, 0.50);
    report.p90_ms = percentile(times, 0.90);
    report.p99_ms = percentile(times, 0.99);
    report.max_ms = times.empty() ? 0 : times.back();
    return report;
}

namespace {

nlohmann::json record_json(const CorpusRecord& r, bool timings) {
    nlohmann::json j = {{"graph6", r.graph6},
                        {"n", r.n},
                        {"m", r.m},
                        {"outcome", r.outcome},
                        {"restarts", r.restarts},
                        {"fixed_points", r.fixed_points},
                        {"trace_checksum", r.trace_checksum},
                        {"lift_valid", r.lift_valid},
                        {"states_checked", r.states_checked},
                        {"invariant_violations", r.invariant_violations}};
    if (!r.first_violation.is_null()) j["first_violation"] = r.first_violation;
    if (timings) j["timings_ms"] = {{"solve", r.solve_ms}, {"lift", r.lift_ms}};
    return j;
}

}  // namespace

std::uint64_t CorpusReport::checksum() const {
    std::uint64_t hash = fnv1a("");
    for (const auto& r : records) hash = fnv1a(record_json(r, false).dump() + "\n", hash);
    return hash;
}

nlohmann::json CorpusReport::to_json(bool with_records) const {
    nlohmann::json hist = nlohmann::json::object();
    for (auto [k, v] : restart_histogram) hist[std::to_string(k)] = v;
    nlohmann::json j = {{"size", records.size()},
                        {"success", success},
                        {"petersen", petersen},
                        {"failures", failures},
                        {"restart_histogram", hist},
                        {"lifts_valid", lifts_valid},
                        {"states_checked", states_checked},
                        {"invariant_violations", invariant_violations},
                        {"runtime_ms", {{"p50", p50_ms}, {"p90", p90_ms}, {"p99", p99_ms}, {"max", max_ms}}},
                        {"checksum", checksum()}};
    if (with_records) {
        j["records"] = nlohmann::json::array();
        for (const auto& r : records) j["records"].push_back(record_json(r, true));
    }
    return j;
}

std::string CorpusReport::table() const {
    std::ostringstream out;
    out << "graphs     " << records.size() << '\n'
        << "colored    " << success << '\n'
        << "petersen   " << petersen << '\n'
        << "failed     " << failures.size() << '\n';
    out << "restarts  ";
    for (auto [k, v] : restart_histogram) out << ' ' << k << ':' << v;
    out << '\n' << std::fixed << std::setprecision(3) << "runtime ms  p50 " << p50_ms << "  p90 " << p90_ms
        << "  p99 " << p99_ms << "  max " << max_ms << '\n';
    out << "checksum   " << std::hex << std::setw(16) << std::setfill('0') << checksum() << '\n';
    return out.str();
}

}  // namespace packcolor

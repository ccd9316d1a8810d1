#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "packcolor/constructive.hpp"
#include "packcolor/graph.hpp"

namespace packcolor {

struct CorpusOptions {
    ConstructiveOptions solver;     ///< trace and on_fixed_point are set per graph
    bool lift = false;              ///< also lift to S(G) and verify
    bool check_invariants = false;  ///< run the lemma battery on every fixed point
    unsigned jobs = 1;
};

struct CorpusRecord {
    std::string graph6;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string outcome;  ///< "colored", "petersen" or "failed"
    int restarts = 0;
    int fixed_points = 0;
    double solve_ms = 0;
    double lift_ms = 0;
    std::uint64_t trace_checksum = 0;
    bool lift_valid = false;
    int states_checked = 0;
    int invariant_violations = 0;
    nlohmann::json first_violation;  ///< null when clean
};

struct CorpusReport {
    std::vector<CorpusRecord> records;  ///< sorted by (n, m, graph6)
    int success = 0;
    int petersen = 0;
    std::vector<std::string> failures;
    std::map<int, int> restart_histogram;  ///< restarts used -> colored graphs
    int lifts_valid = 0;
    long states_checked = 0;
    long invariant_violations = 0;
    double p50_ms = 0;
    double p90_ms = 0;
    double p99_ms = 0;
    double max_ms = 0;

    /// FNV-1a over every record with timing fields left out.
    [[nodiscard]] std::uint64_t checksum() const;
    [[nodiscard]] nlohmann::json to_json(bool with_records = true) const;
    [[nodiscard]] std::string table() const;
};

[[nodiscard]] std::uint64_t fnv1a(std::string_view bytes, std::uint64_t hash = 14695981039346656037ULL);

/// `count` connected cubic graphs; orders drawn uniformly from the even
/// values in [n_min, n_max], graph i seeded from mix_seed(seed, i).
[[nodiscard]] std::vector<Graph> random_cubic_corpus(std::size_t count, std::size_t n_min, std::size_t n_max,
                                                     std::uint64_t seed);

[[nodiscard]] CorpusReport run_corpus(const std::vector<Graph>& graphs, const CorpusOptions& opt = {});

}  // namespace packcolor

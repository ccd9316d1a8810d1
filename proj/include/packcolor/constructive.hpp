#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "packcolor/auxiliary.hpp"
#include "packcolor/graph.hpp"
#include "packcolor/packing.hpp"
#include "packcolor/partition.hpp"

namespace packcolor {

/// Lexicographic quality of a partition: more black vertices first, then
/// fewer red components, fewer non-bipartite components of H, and a smaller
/// separation f(H) between them.
struct PartitionScore {
    int black = 0;
    int red_components = 0;
    int cycles = 0;
    Distance separation = kUnreachable;

    /// Strictly better in the lexicographic order above.
    [[nodiscard]] bool better_than(const PartitionScore& o) const;
    [[nodiscard]] bool same_conditions(const PartitionScore& o) const {
        return black == o.black && red_components == o.red_components;
    }
    friend bool operator==(const PartitionScore&, const PartitionScore&) = default;
};

[[nodiscard]] PartitionScore evaluate(const PartitionState& s);
[[nodiscard]] PartitionScore evaluate(const PartitionState& s, const AuxiliaryGraph& h);

/// Receives trace records (one JSON object per driver phase or elimination step).
using TraceSink = std::function<void(const nlohmann::json&)>;

// --- initial state and Condition (I) -------------------------------------

/// Greedy start: I1 a maximal independent set, then I2 a maximal
/// independent set of G - I1. Seed 0 scans vertices in id order; any other
/// seed scans a seeded permutation.
[[nodiscard]] PartitionState initial_partition(const Graph& g, std::uint64_t seed);

inline constexpr std::size_t kDefaultExactCap = 18;

/// Largest |I1| + |I2| over all pairs of disjoint independent sets, by
/// branch and bound. Returns a partition with strictly more than
/// `lower_bound` black vertices, or std::nullopt when none exists. The seed
/// only permutes branching order (which optimum is returned).
[[nodiscard]] std::optional<PartitionState> best_partition_exact(const Graph& g, int lower_bound,
                                                                 std::uint64_t seed = 0);

struct ConditionOptions {
    std::size_t exact_cap = kDefaultExactCap;  ///< run the exact certifier up to this order
    std::uint64_t seed = 0;
    int switch_depth = 3;                       ///< longest switch sequence tried for (II)
};

/// Applies augmenting moves until none applies: (a) a red vertex without a
/// neighbor in I1 (or I2) joins that set; (b) a black vertex leaves its set
/// and two non-adjacent reds that had it as their only neighbor there take
/// its place. For graphs of order <= exact_cap the result is then raised to
/// the exact maximum. Returns whether |I1| + |I2| increased.
bool improve_condition_I(PartitionState& s, const ConditionOptions& opt = {});

/// Searches switch sequences (and side flips of black vertices with no
/// neighbor on the other side) of length <= opt.switch_depth that either
/// make a red vertex addable or reduce the number of red components without
/// changing |I1| + |I2|. Applies the first one found; returns whether it did.
bool improve_condition_II(PartitionState& s, const ConditionOptions& opt = {});

// --- cycle machinery ------------------------------------------------------

/// Re-arranges the ring of a non-T1 context so that `target` is a red P1.
/// The ring blacks stay on ctx.black_side. Throws std::invalid_argument when
/// `target` is not on the ring and PreconditionError when the rearranged
/// sets are not independent.
[[nodiscard]] PartitionState rotate_cycle(const PartitionState& s, const CycleContext& ctx, Vertex target);

/// Odd rings only: re-arranges so that ring edge {a, b} is the red P2.
[[nodiscard]] PartitionState rotate_cycle_pair(const PartitionState& s, const CycleContext& ctx, Vertex a,
                                               Vertex b);

/// Switch of a red P1 `u` of the context with its outside neighbor `outside`.
/// For a T1 the hub is first moved to the side opposite `outside`.
[[nodiscard]] PartitionState switch_out(const PartitionState& s, const CycleContext& ctx, Vertex u, Vertex outside);

/// Local form of the third condition: searches sequences of at most `depth`
/// switches, flips and ring re-arrangements for a state that is better in
/// the full lexicographic score (or has an addable red). Applies the first one
/// found; returns whether it did. A no-op when H has no cycle component.
bool improve_condition_III(PartitionState& s, int depth = 2);

enum class ReduceStatus { Done, Reoptimise, Restart };

/// Drives the number of non-bipartite components of H down to at most one.
/// Each step moves the closest pair of cycle components together: rotate so
/// the endpoint of a shortest connecting path is a red P1, then switch it
/// with the next path vertex. A step must lower (N(H), f(H)) while keeping
/// |I1|+|I2| and the red component count; failing that a short switch search
/// is tried. Reoptimise means a step improved Condition (I) or (II).
ReduceStatus reduce_cycle_count(PartitionState& s, int max_steps = 0, int search_depth = 2);

/// Tentatively switches red P1 `u` with `outside` (default: its first
/// outside neighbor), rebuilds H and reports true unless `outside` ends up in
/// a non-bipartite component together with a vertex of C0 - u.
[[nodiscard]] bool has_good_property(const PartitionState& s, const CycleContext& ctx, Vertex u,
                                     std::optional<Vertex> outside = std::nullopt);

struct EliminationStep {
    int index = 0;
    Vertex x = -1;                    ///< red P1 switched out of the cycle
    Vertex y = -1;                    ///< its outside neighbor
    std::vector<Vertex> cycle;        ///< C_i
    std::vector<Vertex> consumed;     ///< L_{i+1}: path joined by y (empty if the loop ended)
    std::vector<Vertex> emitted;      ///< L_i': C_i - x
    bool rearranged = false;          ///< a T2 ring was rotated first
    CycleShape shape = CycleShape::LongCycle;
};

struct EliminationTrace {
    std::vector<EliminationStep> steps;
    int paths_at_entry = 0;

    /// No consumed path equals a path emitted at an earlier step.
    [[nodiscard]] bool consumed_paths_are_fresh() const;
    [[nodiscard]] int consuming_steps() const;
};

enum class EliminationStatus { Eliminated, Escalate, Reoptimise, Restart };

[[nodiscard]] const char* to_string(EliminationStatus s) noexcept;

struct EliminationResult {
    PartitionState state;
    EliminationTrace trace;
    EliminationStatus status = EliminationStatus::Restart;
    std::string reason;
};

/// Walks the unique cycle component of H out of the graph: repeatedly
/// switches a red P1 with the good property against its outside neighbor,
/// so the cycle moves onto a path component, until H has no cycle. A T2
/// ring is first rotated so the previous outside neighbor sits in the red
/// P2. Stops with Restart when no good red P1 exists, when a consumed path
/// repeats an earlier emitted one, or when more paths are consumed than H
/// had at entry.
[[nodiscard]] EliminationResult eliminate_last_cycle(const PartitionState& s, const TraceSink& sink = {});

/// Classes: I1 -> 1, I2 -> 2, the two sides of H -> 3 and 4. Throws
/// PreconditionError when H is not bipartite.
[[nodiscard]] PackingColoring finalize_coloring(const PartitionState& s);

// --- driver ---------------------------------------------------------------

struct ConstructiveOptions {
    std::uint64_t seed = 0;
    int restarts = 64;
    std::size_t exact_cap = kDefaultExactCap;
    int switch_depth = 3;
    int cycle_search_depth = 2;
    int max_phases = 0;  ///< per attempt; 0 picks 40 + 4n
    TraceSink trace;
    /// Called with every state the driver accepts as a fixed point: no local
    /// improvement for (I) and (II), and with one cycle component none for (III).
    std::function<void(const PartitionState&)> on_fixed_point;
};

enum class ConstructiveStatus { Colored, Petersen, Failed };

[[nodiscard]] const char* to_string(ConstructiveStatus s) noexcept;

struct ConstructiveStats {
    int fixed_points = 0;
    int rejected_fixed_points = 0;  ///< build_H found a violated conclusion
    int reduce_steps = 0;
    int elimination_steps = 0;
    int restarts_used = 0;
    std::vector<std::string> restart_reasons;
};

struct ConstructiveResult {
    ConstructiveStatus status = ConstructiveStatus::Failed;
    std::optional<PackingColoring> coloring;
    std::optional<PartitionState> best;  ///< best state reached when Failed
    ConstructiveStats stats;
};

/// Packing (1,1,2,2)-coloring of a subcubic graph by the constructive
/// procedure; Petersen components are reported, not colored. Disconnected
/// graphs are solved per component. Every returned coloring has passed
/// verify().
[[nodiscard]] ConstructiveResult solve_1122(const Graph& g, const ConstructiveOptions& opt = {});

}  // namespace packcolor

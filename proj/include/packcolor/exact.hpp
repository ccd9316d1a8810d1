#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "packcolor/graph.hpp"
#include "packcolor/packing.hpp"

namespace packcolor {

enum class SolveStatus { Sat, Unsat, BudgetExceeded };

[[nodiscard]] const char* to_string(SolveStatus s) noexcept;

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::optional<PackingColoring> coloring;  ///< present iff status == Sat
    std::uint64_t nodes = 0;                  ///< search-tree nodes expanded
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Backtracking search for a packing coloring with the given schedule.
///
/// Vertices are visited in BFS order from a maximum-degree vertex and each
/// vertex tries classes in index order. Placing v in class i blocks class i
/// on the radius-s_i ball around v, so feasibility of later placements is a
/// counter lookup. Among classes with equal distance, class i+1 may only be
/// opened once class i is non-empty. Unsat is reported only after the whole
/// tree is exhausted; running past `budget` nodes yields BudgetExceeded.
[[nodiscard]] SolveOutcome solve_exact(const Graph& g, const PackingSchedule& schedule,
                                       std::uint64_t budget = kDefaultNodeBudget);

inline constexpr std::uint64_t kDefaultNaiveCap = 10'000'000;

/// Test oracle: enumerates all k^n assignments and verifies each. Throws
/// UnsupportedError when k^n exceeds `cap`.
[[nodiscard]] SolveOutcome naive_solve(const Graph& g, const PackingSchedule& schedule,
                                       std::uint64_t cap = kDefaultNaiveCap);

struct PcnResult {
    std::optional<int> value;              ///< packing chromatic number when established
    std::vector<SolveStatus> per_k;        ///< outcome of (1..k) for k = 1, 2, ...
    std::optional<PackingColoring> witness;
};

/// Smallest k <= k_max such that (1,2,...,k) is satisfiable. The value is
/// left empty when some smaller k ran out of budget (minimality unproven) or
/// when every k up to k_max is unsatisfiable.
[[nodiscard]] PcnResult pcn(const Graph& g, int k_max, std::uint64_t budget = kDefaultNodeBudget);

}  // namespace packcolor

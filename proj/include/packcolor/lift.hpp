#pragma once

#include <cstdint>
#include <optional>

#include "packcolor/constructive.hpp"
#include "packcolor/exact.hpp"
#include "packcolor/packing.hpp"
#include "packcolor/subdivision.hpp"

namespace packcolor {

/// Schedule (1,2,3,4,5) used on subdivisions.
[[nodiscard]] PackingSchedule subdivision_schedule();

struct LiftedColoring {
    const SubdivisionMap* map = nullptr;
    PackingColoring coloring;
};

/// Midpoints -> 1, classes 1..4 of a valid (1,1,2,2)-coloring of G -> 2..5.
/// Distances double in S(G), so the result is a packing (1,2,3,4,5)-coloring.
/// Throws PreconditionError when `c` is not a valid (1,1,2,2)-coloring of
/// the original graph.
[[nodiscard]] LiftedColoring lift_coloring(const SubdivisionMap& map, const PackingColoring& c);

enum class SubdivisionStatus { Colored, BudgetExceeded, Failed };

[[nodiscard]] const char* to_string(SubdivisionStatus s) noexcept;

struct SubdivisionOutcome {
    SubdivisionStatus status = SubdivisionStatus::Failed;
    std::optional<PackingColoring> coloring;  ///< on map.subdivided(), schedule (1,2,3,4,5)
    int petersen_components = 0;              ///< colored by exact search
    std::uint64_t exact_nodes = 0;
    ConstructiveStats stats;
};

/// Packing (1,2,3,4,5)-coloring of S(G) for subcubic G, per component:
/// Petersen components by exact search on their subdivision within
/// `budget` nodes, all others by solve_1122 and lift_coloring. The result is
/// verified before it is returned.
[[nodiscard]] SubdivisionOutcome pcn5_subdivision(const SubdivisionMap& map,
                                                  std::uint64_t budget = kDefaultNodeBudget,
                                                  const ConstructiveOptions& opt = {});

}  // namespace packcolor

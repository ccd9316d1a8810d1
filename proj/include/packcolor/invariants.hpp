#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "packcolor/partition.hpp"

namespace packcolor {

struct InvariantFinding {
    std::string predicate;
    std::vector<Vertex> witness;
    std::string detail;
};

struct LemmaReport {
    std::vector<InvariantFinding> violations;
    /// Non-fatal observations, e.g. a tree component of H that is not a path.
    std::vector<InvariantFinding> notes;

    [[nodiscard]] bool clean() const noexcept { return violations.empty(); }
    [[nodiscard]] std::string to_string() const;
    /// Violations plus the state in RAB encoding, enough to replay a failure.
    [[nodiscard]] nlohmann::json to_json(const PartitionState& s) const;
};

/// Structural conclusions that hold at a partition satisfying the extremality
/// conditions, each evaluated as a predicate:
///  - every red has neighbors in I1 and I2; red components have order <= 2;
///  - a component of H holds at most one red P2 and is a tree or a cycle;
///  - three reds on one black: nothing else red within distance 2, and the
///    three form a triangle component of H; their other neighbors are distinct;
///  - cycle structures: ring blacks on one side, chordless, distance-1
///    neighborhood on the other side and distance-2 neighborhood on the same;
///  - no two reds of a ring (other than a red P2) and no two ring vertices
///    two apart share an outside neighbor;
///  - inner vertices of a path component (blacks adjacent to two of its reds,
///    one a red P1) lie on one side.
/// When H has exactly one cycle component, also: consecutive ring vertices
/// share no neighbor, a red P1 and a ring black share an outside neighbor
/// only on rings with three reds, and no red z off the cycle has a neighbor
/// w on a path u1 u w v u2 between two structure vertices.
[[nodiscard]] LemmaReport check_lemma_invariants(const PartitionState& s);

}  // namespace packcolor

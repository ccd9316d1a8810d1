#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packcolor/graph.hpp"
#include "packcolor/partition.hpp"

namespace packcolor {

enum class ComponentKind { Path, Tree, EvenCycle, OddCycle, Irregular };

[[nodiscard]] const char* to_string(ComponentKind k) noexcept;

struct HComponent {
    std::vector<Vertex> vertices;  ///< sorted red vertices
    ComponentKind kind = ComponentKind::Path;
    bool bipartite = true;
    int red_pairs = 0;  ///< red P2s (G-edges) inside the component

    [[nodiscard]] Vertex id() const { return vertices.front(); }
    [[nodiscard]] bool is_cycle() const {
        return kind == ComponentKind::EvenCycle || kind == ComponentKind::OddCycle;
    }
    [[nodiscard]] bool acyclic() const { return kind == ComponentKind::Path || kind == ComponentKind::Tree; }

    friend bool operator==(const HComponent&, const HComponent&) = default;
};

/// The graph H on the red vertices of a partition, with an edge between two
/// reds at distance at most 2 in G, and its components classified.
///
/// "Cycle count" N(H) counts the non-bipartite components: those are the
/// only ones that prevent coloring the reds with two 2-independent classes.
class AuxiliaryGraph {
public:
    explicit AuxiliaryGraph(const PartitionState& s);

    /// Incremental update after the vertices in `changed` switched color
    /// (red <-> black); `after` is the new partition. Only components that
    /// touch a changed vertex are recomputed.
    void update(const PartitionState& after, std::span<const Vertex> changed);

    [[nodiscard]] const std::vector<HComponent>& components() const noexcept { return components_; }
    /// Index into components(), or -1 for a black vertex.
    [[nodiscard]] int component_of(Vertex v) const { return comp_of_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return adj_.at(static_cast<std::size_t>(v));
    }
    [[nodiscard]] bool contains(Vertex v) const { return component_of(v) >= 0; }

    /// Indices of non-bipartite components, ascending.
    [[nodiscard]] std::vector<int> cycle_components() const;
    [[nodiscard]] int cycle_count() const { return static_cast<int>(cycle_components().size()); }
    [[nodiscard]] int path_count() const;

    /// f(H): minimum G-distance between the red sets of two distinct
    /// non-bipartite components; kUnreachable when there are fewer than two.
    [[nodiscard]] Distance cycle_separation() const;

    /// Order-independent rendering used to compare incremental and full builds.
    [[nodiscard]] std::string summary() const;

    friend bool operator==(const AuxiliaryGraph& a, const AuxiliaryGraph& b) {
        return a.adj_ == b.adj_ && a.components_ == b.components_ && a.comp_of_ == b.comp_of_;
    }

private:
    void link_red(const PartitionState& s, Vertex v);
    void recompute(const PartitionState& s, std::span<const Vertex> seeds);
    HComponent classify(const PartitionState& s, std::vector<Vertex> vertices) const;
    void reindex();

    const Graph* graph_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<HComponent> components_;
    std::vector<int> comp_of_;
};

enum class CycleShape { T1, T2, T3, LongCycle };

[[nodiscard]] const char* to_string(CycleShape s) noexcept;

/// How a cycle component C of H sits in G.
///
/// T1: three reds sharing a black hub. Otherwise C corresponds to a cycle C'
/// of G, stored in `ring` in cyclic order u1 v1 u2 v2 ... where u_i are the
/// reds of C and v_i the blacks joining consecutive reds; at most one pair of
/// consecutive reds is joined directly (the red P2) and then has no v.
struct CycleContext {
    CycleShape shape = CycleShape::LongCycle;
    std::vector<Vertex> reds;         ///< C in cycle order
    std::optional<Vertex> hub;        ///< T1 only
    std::vector<Vertex> ring;         ///< C' (empty for T1)
    std::optional<Edge> red_pair;     ///< red P2 on C'
    Side black_side = Side::Red;      ///< side of the ring blacks (or the hub)

    [[nodiscard]] bool on_structure(Vertex v) const;
    /// Vertices of the corresponding structure: ring, or hub plus reds.
    [[nodiscard]] std::vector<Vertex> structure() const;
    /// Reds of C that are not in a red P2.
    [[nodiscard]] std::vector<Vertex> red_singletons() const;
    /// Neighbors of red `u` outside the structure.
    [[nodiscard]] std::vector<Vertex> outside_neighbors(const Graph& g, Vertex u) const;
};

/// Builds the context of a cycle component. Returns std::nullopt when the
/// component is not a cycle or does not match any of the shapes above.
[[nodiscard]] std::optional<CycleContext> cycle_context(const PartitionState& s, const AuxiliaryGraph& h,
                                                        int component);

/// Conclusions that hold for cycle contexts at an extremal partition:
/// the ring blacks share a side, C' is chordless, vertices at distance 1 from
/// C' are black on the other side and at distance 2 black on the same side.
/// Returns a description of each failure.
[[nodiscard]] std::vector<std::string> cycle_context_violations(const PartitionState& s,
                                                                const CycleContext& ctx);

enum class BuildMode { Plain, FixedPoint };

/// Builds H. In FixedPoint mode the state is claimed to satisfy Conditions
/// (I) and (II) and the structural conclusions that follow are checked:
/// reds adjacent to both sets, red components of order <= 2, at most one red
/// P2 per component of H, and the cycle-context conclusions above. Failure
/// raises InvariantViolation.
[[nodiscard]] AuxiliaryGraph build_H(const PartitionState& s, BuildMode mode = BuildMode::Plain);

}  // namespace packcolor

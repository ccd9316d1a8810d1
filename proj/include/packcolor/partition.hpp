#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// Membership of a vertex: red (outside both sets) or black in I1 / I2.
enum class Side : std::uint8_t { Red = 0, One = 1, Two = 2 };

[[nodiscard]] constexpr Side opposite(Side s) noexcept {
    return s == Side::One ? Side::Two : (s == Side::Two ? Side::One : Side::Red);
}

[[nodiscard]] const char* to_string(Side s) noexcept;

/// Raised when an operation's precondition on the partition does not hold
/// (e.g. a switch that would break independence).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A conclusion that must hold at an extremal partition failed to hold.
/// The driver treats it as a signal that the current state is not extremal
/// and restarts.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two disjoint vertex sets I1, I2 of a graph; everything else is red.
/// Independence is not enforced on every mutation; is_valid() checks it.
class PartitionState {
public:
    explicit PartitionState(const Graph& g);
    PartitionState(const Graph& g, std::vector<Side> sides);

    [[nodiscard]] const Graph& graph() const noexcept { return *graph_; }
    [[nodiscard]] std::size_t order() const noexcept { return sides_.size(); }

    [[nodiscard]] Side side(Vertex v) const { return sides_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] bool is_red(Vertex v) const { return side(v) == Side::Red; }
    [[nodiscard]] bool is_black(Vertex v) const { return side(v) != Side::Red; }
    void set_side(Vertex v, Side s) { sides_.at(static_cast<std::size_t>(v)) = s; }
    [[nodiscard]] std::span<const Side> sides() const noexcept { return sides_; }

    [[nodiscard]] std::vector<Vertex> members(Side s) const;
    [[nodiscard]] std::vector<Vertex> reds() const { return members(Side::Red); }

    /// |I1| + |I2|
    [[nodiscard]] int black_count() const noexcept;

    /// Number of neighbors of v on side s.
    [[nodiscard]] int neighbors_on(Vertex v, Side s) const;

    /// Connected components of G[R].
    [[nodiscard]] int red_component_count() const;

    /// A red vertex with no neighbor in I1 or none in I2, if any.
    [[nodiscard]] bool has_addable_red() const;

    /// I1 and I2 are both independent.
    [[nodiscard]] bool is_valid() const;

    /// Compact "RABB..." rendering (R red, A in I1, B in I2) for diagnostics.
    [[nodiscard]] std::string encode() const;

    friend bool operator==(const PartitionState& a, const PartitionState& b) {
        return a.graph_ == b.graph_ && a.sides_ == b.sides_;
    }

private:
    const Graph* graph_;
    std::vector<Side> sides_;
};

/// True when `red` can take the place of black `black` on its side without
/// breaking independence: `black` is its only neighbor on that side.
[[nodiscard]] bool can_switch(const PartitionState& s, Vertex black, Vertex red);

/// Deletes `black` from its set and adds `red` to it. |I1|+|I2| is unchanged.
/// Throws PreconditionError when can_switch() is false.
[[nodiscard]] PartitionState apply_switch(const PartitionState& s, Vertex black, Vertex red);

/// Moves a black vertex with no neighbor on the opposite side to that side.
[[nodiscard]] bool can_flip(const PartitionState& s, Vertex black);

}  // namespace packcolor

#include "packcolor/partition.hpp"

#include <algorithm>

namespace packcolor {

const char* to_string(Side s) noexcept {
    switch (s) {
        case Side::Red: return "red";
        case Side::One: return "I1";
        case Side::Two: return "I2";
    }
    return "?";
}

PartitionState::PartitionState(const Graph& g) : graph_(&g), sides_(g.order(), Side::Red) {}

PartitionState::PartitionState(const Graph& g, std::vector<Side> sides) : graph_(&g), sides_(std::move(sides)) {
    if (sides_.size() != g.order()) {
        throw std::invalid_argument("partition size does not match graph order");
    }
}

std::vector<Vertex> PartitionState::members(Side s) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < sides_.size(); ++v) {
        if (sides_[v] == s) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

int PartitionState::black_count() const noexcept {
    return static_cast<int>(std::count_if(sides_.begin(), sides_.end(), [](Side s) { return s != Side::Red; }));
}

int PartitionState::neighbors_on(Vertex v, Side s) const {
    int count = 0;
    for (Vertex w : graph_->neighbors(v)) count += sides_[static_cast<std::size_t>(w)] == s ? 1 : 0;
    return count;
}

int PartitionState::red_component_count() const {
    const auto n = sides_.size();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    int comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (sides_[s] != Side::Red || seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(static_cast<Vertex>(s));
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : graph_->neighbors(v)) {
                auto wi = static_cast<std::size_t>(w);
                if (sides_[wi] == Side::Red && !seen[wi]) {
                    seen[wi] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

bool PartitionState::has_addable_red() const {
    for (std::size_t v = 0; v < sides_.size(); ++v) {
        if (sides_[v] != Side::Red) continue;
        bool one = false;
        bool two = false;
        for (Vertex w : graph_->neighbors(static_cast<Vertex>(v))) {
            one = one || sides_[static_cast<std::size_t>(w)] == Side::One;
            two = two || sides_[static_cast<std::size_t>(w)] == Side::Two;
        }
        if (!one || !two) return true;
    }
    return false;
}

bool PartitionState::is_valid() const {
    for (const auto& e : graph_->edges()) {
        Side a = sides_[static_cast<std::size_t>(e.u)];
        if (a != Side::Red && a == sides_[static_cast<std::size_t>(e.v)]) return false;
    }
    return true;
}

std::string PartitionState::encode() const {
    std::string out;
    out.reserve(sides_.size());
    for (Side s : sides_) out.push_back(s == Side::Red ? 'R' : (s == Side::One ? 'A' : 'B'));
    return out;
}

bool can_switch(const PartitionState& s, Vertex black, Vertex red) {
    if (!s.is_black(black) || !s.is_red(red)) return false;
    const Side side = s.side(black);
    for (Vertex w : s.graph().neighbors(red)) {
        if (w != black && s.side(w) == side) return false;
    }
    return true;
}

PartitionState apply_switch(const PartitionState& s, Vertex black, Vertex red) {
    if (!can_switch(s, black, red)) {
        throw PreconditionError("switch(" + std::to_string(black) + "," + std::to_string(red) +
                                ") would break independence or has wrong colors");
    }
    PartitionState out = s;
    out.set_side(red, s.side(black));
    out.set_side(black, Side::Red);
    return out;
}

bool can_flip(const PartitionState& s, Vertex black) {
    return s.is_black(black) && s.neighbors_on(black, opposite(s.side(black))) == 0;
}

}  // namespace packcolor

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// Non-decreasing sequence (s_1, ..., s_k) of positive distances.
class PackingSchedule {
public:
    explicit PackingSchedule(std::vector<int> distances);
    PackingSchedule(std::initializer_list<int> distances) : PackingSchedule(std::vector<int>(distances)) {}

    /// Accepts "1,1,2,2" and the exponent form "1^2,2^2" (mixed is fine).
    [[nodiscard]] static PackingSchedule parse(std::string_view text);

    /// (1, 2, ..., k)
    [[nodiscard]] static PackingSchedule consecutive(int k);

    [[nodiscard]] std::size_t size() const noexcept { return s_.size(); }
    /// Distance parameter of 1-based class `cls`.
    [[nodiscard]] int at(int cls) const { return s_.at(static_cast<std::size_t>(cls - 1)); }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return s_; }
    [[nodiscard]] int max_distance() const noexcept { return s_.back(); }

    /// Comma list with repetitions folded into exponents, e.g. "1^2,2^2".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PackingSchedule&, const PackingSchedule&) = default;

private:
    std::vector<int> s_;
};

/// Total map from vertices to 1-based class indices of a schedule. Class 0
/// marks an unassigned vertex; such a coloring is partial and verify()
/// rejects it.
class PackingColoring {
public:
    PackingColoring(PackingSchedule schedule, std::vector<int> classes);

    /// Builds from explicit class member lists (classes[i] is class i+1).
    [[nodiscard]] static PackingColoring from_classes(PackingSchedule schedule, std::size_t order,
                                                      const std::vector<std::vector<Vertex>>& classes);

    [[nodiscard]] const PackingSchedule& schedule() const noexcept { return schedule_; }
    [[nodiscard]] std::size_t order() const noexcept { return class_of_.size(); }
    [[nodiscard]] int class_of(Vertex v) const { return class_of_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] const std::vector<int>& assignment() const noexcept { return class_of_; }
    [[nodiscard]] bool is_total() const noexcept;

    /// Sorted members of each class, index 0 holding class 1.
    [[nodiscard]] std::vector<std::vector<Vertex>> classes() const;

    friend bool operator==(const PackingColoring&, const PackingColoring&) = default;

private:
    PackingSchedule schedule_;
    std::vector<int> class_of_;
};

struct Violation {
    int cls = 0;  ///< 1-based class index
    Vertex u = 0;
    Vertex v = 0;
    Distance observed = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// std::nullopt means the coloring is valid. Otherwise the first violating
/// pair in (class, u, v) lexicographic order. Throws std::invalid_argument
/// when the coloring is partial or does not match the graph's order.
[[nodiscard]] std::optional<Violation> verify(const Graph& g, const PackingColoring& c);

/// Human-readable verdict line: "Valid" or "Violation class=.. pair=(u,v) distance=..".
[[nodiscard]] std::string describe(const std::optional<Violation>& verdict);

}  // namespace packcolor

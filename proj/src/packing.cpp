#include "packcolor/packing.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace packcolor {

PackingSchedule::PackingSchedule(std::vector<int> distances) : s_(std::move(distances)) {
    if (s_.empty()) throw std::invalid_argument("schedule must have at least one class");
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (s_[i] < 1) throw std::invalid_argument("schedule entries must be positive");
        if (i > 0 && s_[i] < s_[i - 1]) throw std::invalid_argument("schedule must be non-decreasing");
    }
}

PackingSchedule PackingSchedule::parse(std::string_view text) {
    auto parse_int = [&](std::string_view tok) {
        int value = 0;
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("malformed schedule: \"" + std::string(text) + "\"");
        }
        return value;
    };
    while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);

    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start);
        std::size_t caret = item.find('^');
        int value = parse_int(item.substr(0, caret));
        int reps = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1));
        if (reps < 1 || reps > 1000) throw std::invalid_argument("malformed schedule exponent");
        values.insert(values.end(), static_cast<std::size_t>(reps), value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return PackingSchedule(std::move(values));
}

PackingSchedule PackingSchedule::consecutive(int k) {
    if (k < 1) throw std::invalid_argument("consecutive schedule needs k >= 1");
    std::vector<int> values(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    return PackingSchedule(std::move(values));
}

std::string PackingSchedule::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < s_.size();) {
        std::size_t j = i;
        while (j < s_.size() && s_[j] == s_[i]) ++j;
        if (i > 0) out << ',';
        out << s_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

PackingColoring::PackingColoring(PackingSchedule schedule, std::vector<int> classes)
    : schedule_(std::move(schedule)), class_of_(std::move(classes)) {
    const auto k = static_cast<int>(schedule_.size());
    for (int c : class_of_) {
        if (c < 0 || c > k) throw std::invalid_argument("class index out of range for schedule");
    }
}

PackingColoring PackingColoring::from_classes(PackingSchedule schedule, std::size_t order,
                                              const std::vector<std::vector<Vertex>>& classes) {
    if (classes.size() > schedule.size()) {
        throw std::invalid_argument("more classes than schedule entries");
    }
    std::vector<int> assignment(order, 0);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (Vertex v : classes[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= order) {
                throw std::invalid_argument("class member " + std::to_string(v) + " out of range");
            }
            auto& slot = assignment[static_cast<std::size_t>(v)];
            if (slot != 0) throw std::invalid_argument("vertex " + std::to_string(v) + " listed in two classes");
            slot = static_cast<int>(i) + 1;
        }
    }
    return PackingColoring(std::move(schedule), std::move(assignment));
}

bool PackingColoring::is_total() const noexcept {
    return std::none_of(class_of_.begin(), class_of_.end(), [](int c) { return c == 0; });
}

std::vector<std::vector<Vertex>> PackingColoring::classes() const {
    std::vector<std::vector<Vertex>> out(schedule_.size());
    for (std::size_t v = 0; v < class_of_.size(); ++v) {
        if (class_of_[v] > 0) out[static_cast<std::size_t>(class_of_[v] - 1)].push_back(static_cast<Vertex>(v));
    }
    return out;
}

std::optional<Violation> verify(const Graph& g, const PackingColoring& c) {
    if (c.order() != g.order()) {
        throw std::invalid_argument("coloring covers " + std::to_string(c.order()) + " vertices, graph has " +
                                    std::to_string(g.order()));
    }
    if (!c.is_total()) throw std::invalid_argument("coloring is partial");

    const auto members = c.classes();
    std::vector<Distance> dist(g.order(), kUnreachable);
    std::vector<Vertex> touched;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int cls = static_cast<int>(i) + 1;
        const int radius = c.schedule().at(cls);
        for (Vertex a : members[i]) {
            // Radius-bounded BFS from a; the smallest later class member
            // reached is the lexicographically first violation for a.
            std::queue<Vertex> q;
            touched.clear();
            dist[static_cast<std::size_t>(a)] = 0;
            touched.push_back(a);
            q.push(a);
            std::optional<Violation> found;
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop();
                const Distance dv = dist[static_cast<std::size_t>(v)];
                if (v > a && c.class_of(v) == cls && (!found || v < found->v)) {
                    found = Violation{cls, a, v, dv};
                }
                if (dv == radius) continue;
                for (Vertex w : g.neighbors(v)) {
                    if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                        dist[static_cast<std::size_t>(w)] = dv + 1;
                        touched.push_back(w);
                        q.push(w);
                    }
                }
            }
            for (Vertex t : touched) dist[static_cast<std::size_t>(t)] = kUnreachable;
            if (found) return found;
        }
    }
    return std::nullopt;
}

std::string describe(const std::optional<Violation>& verdict) {
    if (!verdict) return "Valid";
    std::ostringstream out;
    out << "Violation class=" << verdict->cls << " pair=(" << verdict->u << "," << verdict->v
        << ") distance=" << verdict->observed;
    return out.str();
}

}  // namespace packcolor

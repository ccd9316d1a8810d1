#include "packcolor/exact.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "packcolor/distance.hpp"
#include "packcolor/graph_io.hpp"

namespace packcolor {

const char* to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::Sat: return "SAT";
        case SolveStatus::Unsat: return "UNSAT";
        case SolveStatus::BudgetExceeded: return "BUDGET";
    }
    return "?";
}

namespace {

std::vector<Vertex> bfs_order_from_max_degree(const Graph& g) {
    const auto n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    while (order.size() < n) {
        Vertex root = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && (root < 0 || g.degree(static_cast<Vertex>(v)) > g.degree(root))) {
                root = static_cast<Vertex>(v);
            }
        }
        std::queue<Vertex> q;
        seen[static_cast<std::size_t>(root)] = 1;
        q.push(root);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            order.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

class ExactSearch {
public:
    ExactSearch(const Graph& g, const PackingSchedule& schedule, std::uint64_t budget)
        : g_(g), schedule_(schedule), budget_(budget), k_(static_cast<int>(schedule.size())),
          order_(bfs_order_from_max_degree(g)), assigned_(g.order(), 0),
          blocked_(static_cast<std::size_t>(k_) * g.order(), 0), used_(static_cast<std::size_t>(k_) + 1, 0) {
        for (int radius : schedule.values()) {
            if (balls_.contains(radius)) continue;
            auto& table = balls_[radius];
            table.reserve(g.order());
            for (std::size_t v = 0; v < g.order(); ++v) table.push_back(ball(g, static_cast<Vertex>(v), radius));
        }
    }

    SolveOutcome run() {
        SolveOutcome out;
        bool found = descend(0);
        out.nodes = nodes_;
        if (found) {
            out.status = SolveStatus::Sat;
            out.coloring = PackingColoring(schedule_, assigned_);
        } else {
            out.status = aborted_ ? SolveStatus::BudgetExceeded : SolveStatus::Unsat;
        }
        return out;
    }

private:
    int& blocked(int cls, Vertex v) {
        return blocked_[static_cast<std::size_t>(cls - 1) * g_.order() + static_cast<std::size_t>(v)];
    }

    bool dead(Vertex w) {
        for (int c = 1; c <= k_; ++c) {
            if (blocked(c, w) == 0) return false;
        }
        return true;
    }

    bool descend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        for (int cls = 1; cls <= k_; ++cls) {
            if (blocked(cls, v) != 0) continue;
            if (cls > 1 && used_[static_cast<std::size_t>(cls)] == 0 &&
                schedule_.at(cls) == schedule_.at(cls - 1) && used_[static_cast<std::size_t>(cls - 1)] == 0) {
                continue;
            }
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            const auto& near = balls_.at(schedule_.at(cls))[static_cast<std::size_t>(v)];
            assigned_[static_cast<std::size_t>(v)] = cls;
            ++used_[static_cast<std::size_t>(cls)];
            bool wiped = false;
            for (Vertex w : near) {
                if (++blocked(cls, w) == 1 && assigned_[static_cast<std::size_t>(w)] == 0 && dead(w)) wiped = true;
            }
            if (!wiped && descend(depth + 1)) return true;
            for (Vertex w : near) --blocked(cls, w);
            --used_[static_cast<std::size_t>(cls)];
            assigned_[static_cast<std::size_t>(v)] = 0;
            if (aborted_) return false;
        }
        return false;
    }

    const Graph& g_;
    const PackingSchedule& schedule_;
    std::uint64_t budget_;
    int k_;
    std::vector<Vertex> order_;
    std::vector<int> assigned_;
    std::vector<int> blocked_;
    std::vector<int> used_;
    std::map<int, std::vector<std::vector<Vertex>>> balls_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

SolveOutcome solve_exact(const Graph& g, const PackingSchedule& schedule, std::uint64_t budget) {
    return ExactSearch(g, schedule, budget).run();
}

SolveOutcome naive_solve(const Graph& g, const PackingSchedule& schedule, std::uint64_t cap) {
    const auto n = g.order();
    const auto k = static_cast<std::uint64_t>(schedule.size());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > cap / k) {
            throw UnsupportedError("naive_solve: k^n exceeds cap of " + std::to_string(cap));
        }
        total *= k;
    }
    SolveOutcome out;
    std::vector<int> assignment(n, 1);
    for (std::uint64_t iter = 0; iter < total; ++iter) {
        ++out.nodes;
        PackingColoring candidate(schedule, assignment);
        if (!verify(g, candidate)) {
            out.status = SolveStatus::Sat;
            out.coloring = std::move(candidate);
            return out;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (assignment[i] < static_cast<int>(k)) {
                ++assignment[i];
                break;
            }
            assignment[i] = 1;
        }
    }
    out.status = SolveStatus::Unsat;
    return out;
}

PcnResult pcn(const Graph& g, int k_max, std::uint64_t budget) {
    if (k_max < 1) throw std::invalid_argument("pcn: k_max must be >= 1");
    PcnResult result;
    bool inconclusive = false;
    for (int k = 1; k <= k_max; ++k) {
        auto outcome = solve_exact(g, PackingSchedule::consecutive(k), budget);
        result.per_k.push_back(outcome.status);
        if (outcome.status == SolveStatus::BudgetExceeded) {
            inconclusive = true;
        } else if (outcome.status == SolveStatus::Sat) {
            if (!inconclusive) result.value = k;
            result.witness = std::move(outcome.coloring);
            break;
        }
    }
    return result;
}

}  // namespace packcolor

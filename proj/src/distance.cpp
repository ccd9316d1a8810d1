#include "packcolor/distance.hpp"

#include <algorithm>
#include <queue>

namespace packcolor {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    g.check_vertex(source);
    std::vector<Distance> dist(g.order(), kUnreachable);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw == kUnreachable) {
                dw = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(v);
    return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

std::vector<Vertex> ball(const Graph& g, Vertex source, int radius) {
    g.check_vertex(source);
    std::vector<Vertex> out;
    if (radius <= 0) return out;
    std::vector<Vertex> frontier{source};
    std::vector<Vertex> next;
    out.push_back(source);
    for (int r = 0; r < radius && !frontier.empty(); ++r) {
        next.clear();
        for (Vertex v : frontier) {
            for (Vertex w : g.neighbors(v)) {
                if (std::find(out.begin(), out.end(), w) == out.end()) {
                    out.push_back(w);
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    out.erase(out.begin());
    return out;
}

Distance set_distance(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty() || b.empty()) return kUnreachable;
    std::vector<Distance> dist(g.order(), kUnreachable);
    std::queue<Vertex> q;
    for (Vertex v : a) {
        g.check_vertex(v);
        if (dist[static_cast<std::size_t>(v)] != 0) {
            dist[static_cast<std::size_t>(v)] = 0;
            q.push(v);
        }
    }
    std::vector<char> target(g.order(), 0);
    for (Vertex v : b) {
        g.check_vertex(v);
        target[static_cast<std::size_t>(v)] = 1;
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (target[static_cast<std::size_t>(v)]) return dist[static_cast<std::size_t>(v)];
        for (Vertex w : g.neighbors(v)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw == kUnreachable) {
                dw = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return kUnreachable;
}

Distance girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge (v,w) closes a cycle of length
    // dist[v] + dist[w] + 1 through the root, and the minimum over all roots
    // is exact.
    Distance best = kUnreachable;
    const auto n = g.order();
    std::vector<Distance> dist(n);
    std::vector<Vertex> parent(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(static_cast<Vertex>(s));
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            auto dv = dist[static_cast<std::size_t>(v)];
            if (best != kUnreachable && 2 * dv + 1 >= best) break;
            for (Vertex w : g.neighbors(v)) {
                auto& dw = dist[static_cast<std::size_t>(w)];
                if (dw == kUnreachable) {
                    dw = dv + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    q.push(w);
                } else if (parent[static_cast<std::size_t>(v)] != w) {
                    best = std::min(best, dv + dw + 1);
                }
            }
        }
    }
    return best;
}

DistanceOracle::DistanceOracle(const Graph& g, std::size_t table_cap) : graph_(&g), n_(g.order()) {
    if (n_ <= table_cap) {
        table_.resize(n_ * n_);
        for (std::size_t s = 0; s < n_; ++s) {
            auto row = bfs_distances(g, static_cast<Vertex>(s));
            std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(s * n_));
        }
    }
}

Distance DistanceOracle::operator()(Vertex u, Vertex v) const {
    graph_->check_vertex(u);
    graph_->check_vertex(v);
    if (has_table()) return table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
    return distance(*graph_, u, v);
}

bool DistanceOracle::within(Vertex u, Vertex v, int radius) const {
    graph_->check_vertex(u);
    graph_->check_vertex(v);
    if (has_table()) return table_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] <= radius;
    if (u == v) return true;
    auto near = ball(*graph_, u, radius);
    return std::find(near.begin(), near.end(), v) != near.end();
}

}  // namespace packcolor

#include "packcolor/auxiliary.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "packcolor/distance.hpp"

namespace packcolor {

const char* to_string(ComponentKind k) noexcept {
    switch (k) {
        case ComponentKind::Path: return "path";
        case ComponentKind::Tree: return "tree";
        case ComponentKind::EvenCycle: return "even-cycle";
        case ComponentKind::OddCycle: return "odd-cycle";
        case ComponentKind::Irregular: return "irregular";
    }
    return "?";
}

const char* to_string(CycleShape s) noexcept {
    switch (s) {
        case CycleShape::T1: return "T1";
        case CycleShape::T2: return "T2";
        case CycleShape::T3: return "T3";
        case CycleShape::LongCycle: return "long-cycle";
    }
    return "?";
}

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

void erase_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
}

}  // namespace

AuxiliaryGraph::AuxiliaryGraph(const PartitionState& s)
    : graph_(&s.graph()), adj_(s.order()), comp_of_(s.order(), -1) {
    auto reds = s.reds();
    for (Vertex v : reds) link_red(s, v);
    recompute(s, reds);
}

void AuxiliaryGraph::link_red(const PartitionState& s, Vertex v) {
    const Graph& g = s.graph();
    auto connect = [&](Vertex w) {
        if (w == v || !s.is_red(w)) return;
        insert_sorted(adj_[static_cast<std::size_t>(v)], w);
        insert_sorted(adj_[static_cast<std::size_t>(w)], v);
    };
    for (Vertex w : g.neighbors(v)) {
        connect(w);
        for (Vertex x : g.neighbors(w)) connect(x);
    }
}

void AuxiliaryGraph::update(const PartitionState& after, std::span<const Vertex> changed) {
    std::set<int> touched;
    auto touch = [&](Vertex v) {
        int c = comp_of_[static_cast<std::size_t>(v)];
        if (c >= 0) touched.insert(c);
    };
    for (Vertex c : changed) {
        touch(c);
        for (Vertex w : adj_[static_cast<std::size_t>(c)]) touch(w);
    }
    for (Vertex c : changed) {
        if (after.is_black(c)) {
            for (Vertex w : adj_[static_cast<std::size_t>(c)]) erase_sorted(adj_[static_cast<std::size_t>(w)], c);
            adj_[static_cast<std::size_t>(c)].clear();
        }
    }
    std::vector<Vertex> seeds;
    for (Vertex c : changed) {
        if (after.is_red(c)) {
            link_red(after, c);
            seeds.push_back(c);
            for (Vertex w : adj_[static_cast<std::size_t>(c)]) touch(w);
        }
    }
    std::vector<HComponent> kept;
    for (int i = 0; i < static_cast<int>(components_.size()); ++i) {
        if (!touched.contains(i)) {
            kept.push_back(std::move(components_[static_cast<std::size_t>(i)]));
            continue;
        }
        for (Vertex v : components_[static_cast<std::size_t>(i)].vertices) {
            comp_of_[static_cast<std::size_t>(v)] = -1;
            if (after.is_red(v)) seeds.push_back(v);
        }
    }
    for (Vertex c : changed) comp_of_[static_cast<std::size_t>(c)] = -1;
    components_ = std::move(kept);
    recompute(after, seeds);
}

void AuxiliaryGraph::recompute(const PartitionState& s, std::span<const Vertex> seeds) {
    std::vector<char> seen(s.order(), 0);
    for (Vertex seed : seeds) {
        if (seen[static_cast<std::size_t>(seed)] || !s.is_red(seed)) continue;
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{seed};
        seen[static_cast<std::size_t>(seed)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components_.push_back(classify(s, std::move(comp)));
    }
    reindex();
}

HComponent AuxiliaryGraph::classify(const PartitionState& s, std::vector<Vertex> vertices) const {
    HComponent c;
    std::size_t degree_sum = 0;
    bool all_two = true;
    bool max_two = true;
    for (Vertex v : vertices) {
        auto d = adj_[static_cast<std::size_t>(v)].size();
        degree_sum += d;
        all_two = all_two && d == 2;
        max_two = max_two && d <= 2;
        for (Vertex w : s.graph().neighbors(v)) {
            if (w > v && s.is_red(w)) ++c.red_pairs;
        }
    }
    const std::size_t edges = degree_sum / 2;
    const std::size_t order = vertices.size();
    if (edges + 1 == order) {
        c.kind = max_two ? ComponentKind::Path : ComponentKind::Tree;
        c.bipartite = true;
    } else if (edges == order && all_two) {
        c.kind = order % 2 == 0 ? ComponentKind::EvenCycle : ComponentKind::OddCycle;
        c.bipartite = order % 2 == 0;
    } else {
        c.kind = ComponentKind::Irregular;
        std::vector<int> color(s.order(), -1);
        std::queue<Vertex> q;
        color[static_cast<std::size_t>(vertices.front())] = 0;
        q.push(vertices.front());
        c.bipartite = true;
        while (!q.empty() && c.bipartite) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
                auto& cw = color[static_cast<std::size_t>(w)];
                if (cw < 0) {
                    cw = 1 - color[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (cw == color[static_cast<std::size_t>(v)]) {
                    c.bipartite = false;
                }
            }
        }
    }
    c.vertices = std::move(vertices);
    return c;
}

void AuxiliaryGraph::reindex() {
    std::sort(components_.begin(), components_.end(),
              [](const HComponent& a, const HComponent& b) { return a.id() < b.id(); });
    std::fill(comp_of_.begin(), comp_of_.end(), -1);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        for (Vertex v : components_[i].vertices) comp_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
}

std::vector<int> AuxiliaryGraph::cycle_components() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].bipartite) out.push_back(static_cast<int>(i));
    }
    return out;
}

int AuxiliaryGraph::path_count() const {
    return static_cast<int>(
        std::count_if(components_.begin(), components_.end(), [](const HComponent& c) { return c.acyclic(); }));
}

Distance AuxiliaryGraph::cycle_separation() const {
    auto cycles = cycle_components();
    Distance best = kUnreachable;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            best = std::min(best, set_distance(*graph_, components_[static_cast<std::size_t>(cycles[i])].vertices,
                                               components_[static_cast<std::size_t>(cycles[j])].vertices));
        }
    }
    return best;
}

std::string AuxiliaryGraph::summary() const {
    std::ostringstream out;
    for (const auto& c : components_) {
        out << to_string(c.kind) << (c.bipartite ? "" : "*") << " p" << c.red_pairs << " {";
        for (Vertex v : c.vertices) {
            out << ' ' << v << ':';
            for (Vertex w : adj_[static_cast<std::size_t>(v)]) out << w << ',';
        }
        out << " }\n";
    }
    return out.str();
}

bool CycleContext::on_structure(Vertex v) const {
    if (shape == CycleShape::T1) {
        return v == hub || std::find(reds.begin(), reds.end(), v) != reds.end();
    }
    return std::find(ring.begin(), ring.end(), v) != ring.end();
}

std::vector<Vertex> CycleContext::structure() const {
    if (shape != CycleShape::T1) return ring;
    std::vector<Vertex> out = reds;
    if (hub) out.push_back(*hub);
    return out;
}

std::vector<Vertex> CycleContext::red_singletons() const {
    std::vector<Vertex> out;
    for (Vertex v : reds) {
        if (red_pair && (red_pair->u == v || red_pair->v == v)) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<Vertex> CycleContext::outside_neighbors(const Graph& g, Vertex u) const {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(u)) {
        if (!on_structure(w)) out.push_back(w);
    }
    return out;
}

std::optional<CycleContext> cycle_context(const PartitionState& s, const AuxiliaryGraph& h, int component) {
    const auto& comp = h.components().at(static_cast<std::size_t>(component));
    if (!comp.is_cycle()) return std::nullopt;
    const Graph& g = s.graph();

    CycleContext ctx;
    Vertex prev = -1;
    Vertex cur = comp.id();
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
        ctx.reds.push_back(cur);
        auto nb = h.neighbors(cur);
        Vertex next = nb[0] != prev ? nb[0] : nb[1];
        if (i == 0) next = std::min(nb[0], nb[1]);
        prev = cur;
        cur = next;
    }
    const auto k = ctx.reds.size();

    if (k == 3) {
        for (Vertex x : g.neighbors(ctx.reds[0])) {
            if (s.is_black(x) && g.adjacent(x, ctx.reds[1]) && g.adjacent(x, ctx.reds[2])) {
                ctx.shape = CycleShape::T1;
                ctx.hub = x;
                ctx.black_side = s.side(x);
                return ctx;
            }
        }
    }

    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = ctx.reds[i];
        Vertex b = ctx.reds[(i + 1) % k];
        ctx.ring.push_back(a);
        if (g.adjacent(a, b)) {
            if (ctx.red_pair) return std::nullopt;
            ctx.red_pair = Edge{std::min(a, b), std::max(a, b)};
            continue;
        }
        Vertex link = -1;
        for (Vertex w : g.neighbors(a)) {
            if (s.is_black(w) && g.adjacent(w, b) &&
                std::find(ctx.ring.begin(), ctx.ring.end(), w) == ctx.ring.end()) {
                link = w;
                break;
            }
        }
        if (link < 0) return std::nullopt;
        ctx.ring.push_back(link);
    }
    for (Vertex v : ctx.ring) {
        if (s.is_black(v)) {
            ctx.black_side = s.side(v);
            break;
        }
    }
    if (k == 3) {
        ctx.shape = ctx.red_pair ? CycleShape::T2 : CycleShape::T3;
    } else {
        ctx.shape = CycleShape::LongCycle;
    }
    return ctx;
}

std::vector<std::string> cycle_context_violations(const PartitionState& s, const CycleContext& ctx) {
    std::vector<std::string> out;
    const Graph& g = s.graph();
    auto name = [](Vertex v) { return std::to_string(v); };

    if (ctx.shape == CycleShape::T1) {
        std::vector<Distance> dist(g.order(), kUnreachable);
        std::queue<Vertex> q;
        for (Vertex r : ctx.reds) {
            dist[static_cast<std::size_t>(r)] = 0;
            q.push(r);
        }
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            if (dist[static_cast<std::size_t>(v)] == 2) continue;
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    q.push(w);
                }
            }
        }
        for (std::size_t y = 0; y < g.order(); ++y) {
            auto vy = static_cast<Vertex>(y);
            if (dist[y] != kUnreachable && dist[y] > 0 && s.is_red(vy)) {
                out.push_back("T1 neighbourhood: red " + name(vy) + " within distance 2 of the hub's reds");
            }
        }
        return out;
    }

    const auto len = ctx.ring.size();
    for (Vertex v : ctx.ring) {
        if (s.is_black(v) && s.side(v) != ctx.black_side) {
            out.push_back("ring blacks on both sides (vertex " + name(v) + ")");
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.adjacent(ctx.ring[i], ctx.ring[j])) {
                out.push_back("chord " + name(ctx.ring[i]) + "-" + name(ctx.ring[j]));
            }
        }
    }
    std::vector<Distance> dist(g.order(), kUnreachable);
    std::queue<Vertex> q;
    for (Vertex v : ctx.ring) {
        dist[static_cast<std::size_t>(v)] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (dist[static_cast<std::size_t>(v)] == 2) continue;
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
        auto vx = static_cast<Vertex>(x);
        if (dist[x] == 1 && s.side(vx) != opposite(ctx.black_side)) {
            out.push_back("vertex " + name(vx) + " at distance 1 from C' is " + to_string(s.side(vx)));
        } else if (dist[x] == 2 && s.side(vx) != ctx.black_side) {
            out.push_back("vertex " + name(vx) + " at distance 2 from C' is " + to_string(s.side(vx)));
        }
    }
    return out;
}

AuxiliaryGraph build_H(const PartitionState& s, BuildMode mode) {
    AuxiliaryGraph h(s);
    if (mode == BuildMode::Plain) return h;

    const Graph& g = s.graph();
    for (Vertex r : s.reds()) {
        if (s.neighbors_on(r, Side::One) == 0 || s.neighbors_on(r, Side::Two) == 0) {
            throw InvariantViolation("red " + std::to_string(r) + " lacks a neighbor in I1 or I2");
        }
        if (s.neighbors_on(r, Side::Red) > 1) {
            throw InvariantViolation("red component through " + std::to_string(r) + " has more than two vertices");
        }
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
        auto vx = static_cast<Vertex>(x);
        if (!s.is_black(vx) || s.neighbors_on(vx, Side::Red) < 3) continue;
        std::vector<Vertex> reds;
        for (Vertex w : g.neighbors(vx)) {
            if (s.is_red(w)) reds.push_back(w);
        }
        const auto& comp = h.components()[static_cast<std::size_t>(h.component_of(reds[0]))];
        std::sort(reds.begin(), reds.end());
        if (comp.vertices != reds || comp.kind != ComponentKind::OddCycle) {
            throw InvariantViolation("reds around black " + std::to_string(vx) + " are not a triangle component of H");
        }
    }
    for (std::size_t i = 0; i < h.components().size(); ++i) {
        const auto& comp = h.components()[i];
        if (comp.red_pairs > 1) {
            throw InvariantViolation("component " + std::to_string(comp.id()) + " of H holds several red P2s");
        }
        if (comp.kind == ComponentKind::Irregular) {
            throw InvariantViolation("component " + std::to_string(comp.id()) + " of H is neither a tree nor a cycle");
        }
        if (!comp.is_cycle()) continue;
        auto ctx = cycle_context(s, h, static_cast<int>(i));
        if (!ctx) {
            throw InvariantViolation("cycle component " + std::to_string(comp.id()) + " has no T1/cycle structure");
        }
        auto problems = cycle_context_violations(s, *ctx);
        if (!problems.empty()) {
            throw InvariantViolation("cycle component " + std::to_string(comp.id()) + ": " + problems.front());
        }
    }
    return h;
}

}  // namespace packcolor

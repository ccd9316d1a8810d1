#include "packcolor/invariants.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "packcolor/auxiliary.hpp"
#include "packcolor/distance.hpp"

namespace packcolor {

std::string LemmaReport::to_string() const {
    if (violations.empty()) return "clean";
    std::ostringstream out;
    for (const auto& v : violations) {
        out << v.predicate << ":";
        for (Vertex w : v.witness) out << ' ' << w;
        if (!v.detail.empty()) out << " (" << v.detail << ')';
        out << '\n';
    }
    return out.str();
}

nlohmann::json LemmaReport::to_json(const PartitionState& s) const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : violations) {
        list.push_back({{"predicate", v.predicate}, {"witness", v.witness}, {"detail", v.detail}});
    }
    return {{"state", s.encode()}, {"violations", list}};
}

namespace {

class Checker {
public:
    explicit Checker(const PartitionState& s) : s_(s), g_(s.graph()), h_(s) {}

    LemmaReport run() {
        red_neighborhoods();
        components_of_H();
        shared_black_hubs();
        const auto cycles = h_.cycle_components();
        for (int c : cycles) {
            auto ctx = cycle_context(s_, h_, c);
            if (!ctx) {
                fail("cycle-structure", h_.components()[static_cast<std::size_t>(c)].vertices,
                     "cycle component matches no T1/ring structure");
                continue;
            }
            for (const auto& problem : cycle_context_violations(s_, *ctx)) fail("cycle-structure", ctx->reds, problem);
            if (ctx->shape == CycleShape::T1) {
                distinct_hub_neighbors(*ctx);
            } else {
                ring_outside_neighbors(*ctx, cycles.size() == 1);
            }
            if (cycles.size() == 1) no_bridging_paths(*ctx);
        }
        inner_vertices();
        return std::move(report_);
    }

private:
    void fail(std::string predicate, std::vector<Vertex> witness, std::string detail = {}) {
        report_.violations.push_back({std::move(predicate), std::move(witness), std::move(detail)});
    }

    bool red_singleton(Vertex v) const { return s_.is_red(v) && s_.neighbors_on(v, Side::Red) == 0; }

    void red_neighborhoods() {
        for (Vertex r : s_.reds()) {
            if (s_.neighbors_on(r, Side::One) == 0 || s_.neighbors_on(r, Side::Two) == 0) {
                fail("red-sees-both-sets", {r});
            }
            if (s_.neighbors_on(r, Side::Red) > 1) fail("red-components-small", {r}, "red vertex with two red neighbors");
        }
    }

    void components_of_H() {
        for (const auto& comp : h_.components()) {
            if (comp.red_pairs > 1) fail("one-red-p2-per-component", comp.vertices);
            if (comp.kind == ComponentKind::Irregular) {
                fail("component-tree-or-cycle", comp.vertices);
            } else if (comp.kind == ComponentKind::Tree) {
                report_.notes.push_back({"non-path-tree", comp.vertices, "tree component of H that is not a path"});
            }
        }
    }

    void shared_black_hubs() {
        for (std::size_t xi = 0; xi < g_.order(); ++xi) {
            auto x = static_cast<Vertex>(xi);
            if (!s_.is_black(x) || s_.neighbors_on(x, Side::Red) < 3) continue;
            std::vector<Vertex> reds;
            for (Vertex w : g_.neighbors(x)) {
                if (s_.is_red(w)) reds.push_back(w);
            }
            std::sort(reds.begin(), reds.end());
            for (Vertex r : reds) {
                for (Vertex y : ball(g_, r, 2)) {
                    if (s_.is_red(y) && !std::binary_search(reds.begin(), reds.end(), y)) {
                        fail("hub-neighborhood-black", {x, r, y}, "red within distance 2 of a hub's reds");
                    }
                }
            }
            const int c = h_.component_of(reds.front());
            const auto& comp = h_.components()[static_cast<std::size_t>(c)];
            if (comp.vertices != reds) fail("hub-reds-form-triangle", reds);
        }
    }

    void distinct_hub_neighbors(const CycleContext& ctx) {
        std::vector<Vertex> seen;
        for (Vertex r : ctx.reds) {
            for (Vertex w : g_.neighbors(r)) {
                if (w == *ctx.hub) continue;
                if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
                    fail("hub-reds-distinct-neighbors", {*ctx.hub, r, w});
                }
                seen.push_back(w);
            }
        }
    }

    void ring_outside_neighbors(const CycleContext& ctx, bool unique_cycle) {
        const auto& ring = ctx.ring;
        const std::size_t len = ring.size();
        auto outside = [&](Vertex v) {
            std::vector<Vertex> out;
            for (Vertex w : g_.neighbors(v)) {
                if (!ctx.on_structure(w)) out.push_back(w);
            }
            return out;
        };
        auto common = [&](Vertex a, Vertex b, bool outside_only) {
            std::vector<Vertex> out;
            for (Vertex w : g_.neighbors(a)) {
                if (outside_only && ctx.on_structure(w)) continue;
                if (g_.adjacent(w, b)) out.push_back(w);
            }
            return out;
        };
        auto is_pair = [&](Vertex a, Vertex b) {
            return ctx.red_pair && std::min(a, b) == ctx.red_pair->u && std::max(a, b) == ctx.red_pair->v;
        };

        for (std::size_t i = 0; i < ctx.reds.size(); ++i) {
            for (std::size_t j = i + 1; j < ctx.reds.size(); ++j) {
                Vertex a = ctx.reds[i];
                Vertex b = ctx.reds[j];
                if (is_pair(a, b)) continue;
                for (Vertex w : common(a, b, true)) fail("ring-reds-no-common-outside-neighbor", {a, b, w});
            }
        }
        for (std::size_t i = 0; i < len; ++i) {
            Vertex a = ring[i];
            Vertex b = ring[(i + 2) % len];
            for (Vertex w : common(a, b, true)) fail("ring-two-apart-no-common-outside-neighbor", {a, b, w});
        }
        if (!unique_cycle) return;
        for (std::size_t i = 0; i < len; ++i) {
            Vertex a = ring[i];
            Vertex b = ring[(i + 1) % len];
            for (Vertex w : common(a, b, false)) fail("ring-consecutive-no-common-neighbor", {a, b, w});
        }
        if (ctx.reds.size() == 3) return;
        for (Vertex u : ctx.red_singletons()) {
            for (Vertex w : outside(u)) {
                for (Vertex v : ring) {
                    if (s_.is_black(v) && g_.adjacent(v, w)) fail("red-p1-and-ring-black-share-neighbor", {u, v, w});
                }
            }
        }
    }

    void no_bridging_paths(const CycleContext& ctx) {
        std::vector<Vertex> u_set = ctx.shape == CycleShape::T1 ? ctx.reds : ctx.ring;
        std::sort(u_set.begin(), u_set.end());
        auto in_u = [&](Vertex v) { return std::binary_search(u_set.begin(), u_set.end(), v); };
        std::vector<Vertex> cycle_reds = ctx.reds;
        std::sort(cycle_reds.begin(), cycle_reds.end());
        for (Vertex z : s_.reds()) {
            if (std::binary_search(cycle_reds.begin(), cycle_reds.end(), z)) continue;
            for (Vertex w : g_.neighbors(z)) {
                for (Vertex u : g_.neighbors(w)) {
                    if (in_u(u)) continue;
                    for (Vertex v : g_.neighbors(w)) {
                        if (v <= u || in_u(v)) continue;
                        for (Vertex u1 : g_.neighbors(u)) {
                            if (!in_u(u1) || u1 == w) continue;
                            for (Vertex u2 : g_.neighbors(v)) {
                                if (!in_u(u2) || u2 == w || u2 == u1) continue;
                                fail("no-path-between-structure-through-red-neighbor", {z, u1, u, w, v, u2});
                            }
                        }
                    }
                }
            }
        }
    }

    void inner_vertices() {
        for (const auto& comp : h_.components()) {
            if (comp.kind != ComponentKind::Path) continue;
            std::set<Vertex> inner;
            for (Vertex r : comp.vertices) {
                if (!red_singleton(r)) continue;
                for (Vertex x : g_.neighbors(r)) {
                    if (s_.is_black(x) && s_.neighbors_on(x, Side::Red) >= 2) inner.insert(x);
                }
            }
            std::optional<Side> side;
            for (Vertex x : inner) {
                if (!side) side = s_.side(x);
                if (s_.side(x) != *side) {
                    fail("inner-vertices-one-side", std::vector<Vertex>(inner.begin(), inner.end()));
                    break;
                }
            }
        }
    }

    const PartitionState& s_;
    const Graph& g_;
    AuxiliaryGraph h_;
    LemmaReport report_;
};

}  // namespace

LemmaReport check_lemma_invariants(const PartitionState& s) { return Checker(s).run(); }

}  // namespace packcolor

#include "packcolor/constructive.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "packcolor/distance.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/rng.hpp"

namespace packcolor {

namespace {

nlohmann::json distance_json(Distance d) {
    return d == kUnreachable ? nlohmann::json(nullptr) : nlohmann::json(d);
}

nlohmann::json score_json(const PartitionScore& sc) {
    return {{"black", sc.black},
            {"components", sc.red_components},
            {"cycles", sc.cycles},
            {"f", distance_json(sc.separation)}};
}

void emit(const TraceSink& sink, nlohmann::json record) {
    if (sink) sink(record);
}

std::vector<Vertex> without(std::vector<Vertex> items, Vertex v) {
    items.erase(std::remove(items.begin(), items.end(), v), items.end());
    std::sort(items.begin(), items.end());
    return items;
}

std::vector<Vertex> color_changes(const PartitionState& a, const PartitionState& b) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < a.order(); ++v) {
        if (a.is_red(static_cast<Vertex>(v)) != b.is_red(static_cast<Vertex>(v))) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace

bool PartitionScore::better_than(const PartitionScore& o) const {
    return std::tuple(-black, red_components, cycles, separation) <
           std::tuple(-o.black, o.red_components, o.cycles, o.separation);
}

PartitionScore evaluate(const PartitionState& s, const AuxiliaryGraph& h) {
    PartitionScore sc;
    sc.black = s.black_count();
    sc.red_components = s.red_component_count();
    sc.cycles = h.cycle_count();
    sc.separation = h.cycle_separation();
    return sc;
}

PartitionScore evaluate(const PartitionState& s) { return evaluate(s, AuxiliaryGraph(s)); }

// --- Condition (I) ---------------------------------------------------------

PartitionState initial_partition(const Graph& g, std::uint64_t seed) {
    std::vector<Vertex> order(g.order());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<Vertex>(v);
    if (seed != 0) {
        Rng rng(seed);
        rng.shuffle(std::span<Vertex>(order));
    }
    PartitionState s(g);
    for (Side side : {Side::One, Side::Two}) {
        for (Vertex v : order) {
            if (s.is_red(v) && s.neighbors_on(v, side) == 0) s.set_side(v, side);
        }
    }
    return s;
}

namespace {

class PairBranchAndBound {
public:
    PairBranchAndBound(const Graph& g, int lower_bound, std::uint64_t seed)
        : g_(g), n_(g.order()), sides_(n_, Side::Red), placed_(n_, 0), count_one_(n_, 0), count_two_(n_, 0),
          allowed_reds_(static_cast<int>(n_) - lower_bound - 1), prefer_two_(n_, 0) {
        // BFS order keeps constraints local.
        std::vector<char> seen(n_, 0);
        Rng rng(seed);
        std::vector<Vertex> roots(n_);
        for (std::size_t v = 0; v < n_; ++v) roots[v] = static_cast<Vertex>(v);
        if (seed != 0) rng.shuffle(std::span<Vertex>(roots));
        for (Vertex root : roots) {
            if (seen[static_cast<std::size_t>(root)]) continue;
            std::queue<Vertex> q;
            q.push(root);
            seen[static_cast<std::size_t>(root)] = 1;
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop();
                order_.push_back(v);
                for (Vertex w : g.neighbors(v)) {
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        q.push(w);
                    }
                }
            }
        }
        if (seed != 0) {
            for (auto& p : prefer_two_) p = static_cast<char>(rng.below(2));
        }
    }

    std::optional<std::vector<Side>> run() {
        if (allowed_reds_ < 0) return std::nullopt;
        descend(0, 0);
        return best_;
    }

private:
    bool forced(std::size_t v) const { return !placed_[v] && count_one_[v] > 0 && count_two_[v] > 0; }

    void place(Vertex v, Side s, int delta) {
        for (Vertex w : g_.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            bool before = forced(wi);
            (s == Side::One ? count_one_ : count_two_)[wi] += delta;
            bool after = forced(wi);
            forced_count_ += static_cast<int>(after) - static_cast<int>(before);
        }
    }

    void descend(std::size_t depth, int reds) {
        if (reds + forced_count_ > allowed_reds_) return;
        if (depth == n_) {
            best_ = sides_;
            allowed_reds_ = reds - 1;
            return;
        }
        const Vertex v = order_[depth];
        const auto vi = static_cast<std::size_t>(v);
        const bool was_forced = forced(vi);
        placed_[vi] = 1;
        forced_count_ -= static_cast<int>(was_forced);

        Side first = prefer_two_[vi] ? Side::Two : Side::One;
        for (Side s : {first, opposite(first)}) {
            if (blacks_ == 0 && s == Side::Two) continue;  // I1 <-> I2 symmetry
            if ((s == Side::One ? count_one_ : count_two_)[vi] > 0) continue;
            sides_[vi] = s;
            ++blacks_;
            place(v, s, +1);
            descend(depth + 1, reds);
            place(v, s, -1);
            --blacks_;
            sides_[vi] = Side::Red;
        }
        descend(depth + 1, reds + 1);

        placed_[vi] = 0;
        forced_count_ += static_cast<int>(was_forced);
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<Vertex> order_;
    std::vector<Side> sides_;
    std::vector<char> placed_;
    std::vector<int> count_one_;
    std::vector<int> count_two_;
    int forced_count_ = 0;
    int blacks_ = 0;
    int allowed_reds_;
    std::vector<char> prefer_two_;
    std::optional<std::vector<Side>> best_;
};

bool apply_augmenting_moves(PartitionState& s) {
    const Graph& g = s.graph();
    bool any = false;
    for (;;) {
        bool changed = false;
        for (std::size_t vi = 0; vi < s.order(); ++vi) {
            auto v = static_cast<Vertex>(vi);
            if (!s.is_red(v)) continue;
            if (s.neighbors_on(v, Side::One) == 0) {
                s.set_side(v, Side::One);
                changed = true;
            } else if (s.neighbors_on(v, Side::Two) == 0) {
                s.set_side(v, Side::Two);
                changed = true;
            }
        }
        if (!changed) {
            for (std::size_t ui = 0; ui < s.order() && !changed; ++ui) {
                auto u = static_cast<Vertex>(ui);
                if (!s.is_black(u)) continue;
                const Side side = s.side(u);
                std::vector<Vertex> loose;
                for (Vertex r : g.neighbors(u)) {
                    if (s.is_red(r) && s.neighbors_on(r, side) == 1) loose.push_back(r);
                }
                for (std::size_t i = 0; i < loose.size() && !changed; ++i) {
                    for (std::size_t j = i + 1; j < loose.size() && !changed; ++j) {
                        if (g.adjacent(loose[i], loose[j])) continue;
                        s.set_side(u, Side::Red);
                        s.set_side(loose[i], side);
                        s.set_side(loose[j], side);
                        changed = true;
                    }
                }
            }
        }
        if (!changed) return any;
        any = true;
    }
}

}  // namespace

std::optional<PartitionState> best_partition_exact(const Graph& g, int lower_bound, std::uint64_t seed) {
    auto sides = PairBranchAndBound(g, lower_bound, seed).run();
    if (!sides) return std::nullopt;
    return PartitionState(g, std::move(*sides));
}

bool improve_condition_I(PartitionState& s, const ConditionOptions& opt) {
    const int before = s.black_count();
    apply_augmenting_moves(s);
    if (s.order() <= opt.exact_cap) {
        if (auto better = best_partition_exact(s.graph(), s.black_count(), opt.seed)) {
            s = std::move(*better);
            apply_augmenting_moves(s);
        }
    }
    return s.black_count() > before;
}

// --- Condition (II) --------------------------------------------------------

namespace {

struct Move {
    enum class Kind { Switch, Flip } kind = Kind::Switch;
    Vertex black = -1;
    Vertex red = -1;
};

std::vector<Move> local_moves(const PartitionState& s) {
    const Graph& g = s.graph();
    std::vector<Move> out;
    std::vector<char> flip_seen(s.order(), 0);
    for (std::size_t vi = 0; vi < s.order(); ++vi) {
        auto v = static_cast<Vertex>(vi);
        if (!s.is_red(v)) continue;
        for (Vertex u : g.neighbors(v)) {
            if (!s.is_black(u)) continue;
            if (can_switch(s, u, v)) out.push_back({Move::Kind::Switch, u, v});
            if (!flip_seen[static_cast<std::size_t>(u)] && can_flip(s, u)) {
                flip_seen[static_cast<std::size_t>(u)] = 1;
                out.push_back({Move::Kind::Flip, u, -1});
            }
        }
    }
    return out;
}

PartitionState apply_move(const PartitionState& s, const Move& m) {
    if (m.kind == Move::Kind::Switch) return apply_switch(s, m.black, m.red);
    PartitionState out = s;
    out.set_side(m.black, opposite(s.side(m.black)));
    return out;
}

template <typename Accept>
std::optional<PartitionState> search_moves(const PartitionState& s, int depth, const Accept& accept,
                                           std::optional<Move> last = std::nullopt) {
    if (depth <= 0) return std::nullopt;
    for (const Move& m : local_moves(s)) {
        if (last && m.kind == Move::Kind::Switch && last->kind == Move::Kind::Switch && m.black == last->red &&
            m.red == last->black) {
            continue;
        }
        if (last && m.kind == Move::Kind::Flip && last->kind == Move::Kind::Flip && m.black == last->black) continue;
        PartitionState next = apply_move(s, m);
        if (accept(next)) return next;
        if (auto found = search_moves(next, depth - 1, accept, m)) return found;
    }
    return std::nullopt;
}

}  // namespace

bool improve_condition_II(PartitionState& s, const ConditionOptions& opt) {
    if (s.reds().empty()) return false;
    const int comps = s.red_component_count();
    auto found = search_moves(s, opt.switch_depth, [&](const PartitionState& next) {
        return next.has_addable_red() || next.red_component_count() < comps;
    });
    if (!found) return false;
    s = std::move(*found);
    return true;
}

// --- cycle machinery -------------------------------------------------------

namespace {

std::size_t ring_position(const CycleContext& ctx, Vertex v) {
    auto it = std::find(ctx.ring.begin(), ctx.ring.end(), v);
    if (it == ctx.ring.end()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not on the cycle C'");
    }
    return static_cast<std::size_t>(it - ctx.ring.begin());
}

PartitionState paint_ring(const PartitionState& s, const CycleContext& ctx, const std::vector<char>& red) {
    PartitionState out = s;
    for (std::size_t i = 0; i < ctx.ring.size(); ++i) {
        out.set_side(ctx.ring[i], red[i] ? Side::Red : ctx.black_side);
    }
    if (!out.is_valid()) throw PreconditionError("cycle rearrangement breaks independence");
    return out;
}

// Odd ring with the red P2 on positions (j, j+1): the remaining positions
// alternate black, red, ..., black.
std::vector<char> odd_pattern(std::size_t len, std::size_t j) {
    std::vector<char> red(len, 0);
    red[j] = 1;
    red[(j + 1) % len] = 1;
    for (std::size_t step = 3; step < len; step += 2) red[(j + step) % len] = 1;
    return red;
}

}  // namespace

PartitionState rotate_cycle(const PartitionState& s, const CycleContext& ctx, Vertex target) {
    if (ctx.shape == CycleShape::T1) throw std::invalid_argument("rotate_cycle: a T1 has no ring");
    const std::size_t len = ctx.ring.size();
    const std::size_t t = ring_position(ctx, target);
    std::vector<char> red(len, 0);
    if (len % 2 == 0) {
        for (std::size_t i = 0; i < len; ++i) red[i] = static_cast<char>(i % 2 == t % 2);
    } else {
        red = odd_pattern(len, (t + len - 3) % len);
    }
    return paint_ring(s, ctx, red);
}

PartitionState rotate_cycle_pair(const PartitionState& s, const CycleContext& ctx, Vertex a, Vertex b) {
    if (ctx.shape == CycleShape::T1 || ctx.ring.size() % 2 == 0) {
        throw std::invalid_argument("rotate_cycle_pair: needs an odd ring");
    }
    const std::size_t len = ctx.ring.size();
    const std::size_t pa = ring_position(ctx, a);
    const std::size_t pb = ring_position(ctx, b);
    std::size_t j = 0;
    if ((pa + 1) % len == pb) {
        j = pa;
    } else if ((pb + 1) % len == pa) {
        j = pb;
    } else {
        throw std::invalid_argument("rotate_cycle_pair: vertices are not consecutive on C'");
    }
    return paint_ring(s, ctx, odd_pattern(len, j));
}

PartitionState switch_out(const PartitionState& s, const CycleContext& ctx, Vertex u, Vertex outside) {
    if (ctx.shape == CycleShape::T1 && ctx.hub && s.side(*ctx.hub) == s.side(outside)) {
        if (!can_flip(s, *ctx.hub)) throw PreconditionError("T1 hub cannot change sides");
        PartitionState moved = s;
        moved.set_side(*ctx.hub, opposite(s.side(*ctx.hub)));
        return apply_switch(moved, outside, u);
    }
    return apply_switch(s, outside, u);
}

namespace {

// States reachable by re-arranging one cycle component of H along its ring
// (the even ring swapped, the red P2 of an odd ring moved to each edge).
std::vector<PartitionState> cycle_rearrangements(const PartitionState& s) {
    std::vector<PartitionState> out;
    AuxiliaryGraph h(s);
    for (std::size_t c = 0; c < h.components().size(); ++c) {
        if (!h.components()[c].is_cycle()) continue;
        auto ctx = cycle_context(s, h, static_cast<int>(c));
        if (!ctx || ctx->shape == CycleShape::T1) continue;
        const auto& ring = ctx->ring;
        const std::size_t len = ring.size();
        for (std::size_t j = 0; j < len; ++j) {
            try {
                if (len % 2 == 0) {
                    if (s.is_red(ring[j])) continue;
                    out.push_back(rotate_cycle(s, *ctx, ring[j]));
                    break;
                }
                if (s.is_red(ring[j]) && s.is_red(ring[(j + 1) % len])) continue;
                out.push_back(rotate_cycle_pair(s, *ctx, ring[j], ring[(j + 1) % len]));
            } catch (const PreconditionError&) {
            }
        }
    }
    return out;
}

template <typename Accept>
std::optional<PartitionState> search_with_rearrangements(const PartitionState& s, int depth, const Accept& accept) {
    if (depth <= 0) return std::nullopt;
    std::vector<PartitionState> next;
    for (const Move& m : local_moves(s)) next.push_back(apply_move(s, m));
    for (auto& r : cycle_rearrangements(s)) next.push_back(std::move(r));
    for (const auto& t : next) {
        if (accept(t)) return t;
    }
    for (const auto& t : next) {
        if (auto found = search_with_rearrangements(t, depth - 1, accept)) return found;
    }
    return std::nullopt;
}

}  // namespace

bool improve_condition_III(PartitionState& s, int depth) {
    const PartitionScore base = evaluate(s);
    if (base.cycles == 0) return false;
    auto found = search_with_rearrangements(s, depth, [&](const PartitionState& next) {
        return next.has_addable_red() || evaluate(next).better_than(base);
    });
    if (!found) return false;
    s = std::move(*found);
    return true;
}

ReduceStatus reduce_cycle_count(PartitionState& s, int max_steps, int search_depth) {
    const Graph& g = s.graph();
    if (max_steps <= 0) max_steps = 20 + 4 * static_cast<int>(g.order());
    for (int step = 0;; ++step) {
        AuxiliaryGraph h(s);
        auto cycles = h.cycle_components();
        if (cycles.size() <= 1) return ReduceStatus::Done;
        if (step >= max_steps) return ReduceStatus::Restart;
        const PartitionScore base = evaluate(s, h);

        std::vector<PartitionState> candidates;
        for (int ci : cycles) {
            for (int cj : cycles) {
                if (ci == cj) continue;
                const auto& ri = h.components()[static_cast<std::size_t>(ci)].vertices;
                const auto& rj = h.components()[static_cast<std::size_t>(cj)].vertices;
                if (set_distance(g, ri, rj) != base.separation) continue;
                auto ctx = cycle_context(s, h, ci);
                if (!ctx) continue;
                auto other = cycle_context(s, h, cj);
                const auto target = other ? other->structure() : rj;

                std::vector<Distance> dist(g.order(), kUnreachable);
                std::queue<Vertex> q;
                for (Vertex v : target) {
                    dist[static_cast<std::size_t>(v)] = 0;
                    q.push(v);
                }
                while (!q.empty()) {
                    Vertex v = q.front();
                    q.pop();
                    for (Vertex w : g.neighbors(v)) {
                        if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                            q.push(w);
                        }
                    }
                }
                auto mine = ctx->structure();
                std::sort(mine.begin(), mine.end());
                Distance gap = kUnreachable;
                for (Vertex v : mine) gap = std::min(gap, dist[static_cast<std::size_t>(v)]);

                for (Vertex u1 : mine) {
                    if (dist[static_cast<std::size_t>(u1)] != gap || u1 == ctx->hub) continue;
                    for (Vertex v1 : g.neighbors(u1)) {
                        if (dist[static_cast<std::size_t>(v1)] + 1 != gap || ctx->on_structure(v1) || !s.is_black(v1)) {
                            continue;
                        }
                        try {
                            PartitionState prepared = s;
                            auto singles = ctx->red_singletons();
                            if (ctx->shape != CycleShape::T1 &&
                                std::find(singles.begin(), singles.end(), u1) == singles.end()) {
                                prepared = rotate_cycle(s, *ctx, u1);
                            }
                            candidates.push_back(switch_out(prepared, *ctx, u1, v1));
                        } catch (const PreconditionError&) {
                        }
                    }
                }
            }
        }

        std::optional<PartitionState> chosen;
        bool reoptimise = false;
        for (auto& c : candidates) {
            if (c.has_addable_red()) {
                chosen = std::move(c);
                reoptimise = true;
                break;
            }
            PartitionScore sc = evaluate(c);
            if (sc.better_than(base)) {
                reoptimise = !sc.same_conditions(base);
                chosen = std::move(c);
                break;
            }
        }
        if (!chosen) {
            chosen = search_with_rearrangements(s, search_depth, [&](const PartitionState& next) {
                return next.has_addable_red() || evaluate(next).better_than(base);
            });
            if (chosen) reoptimise = chosen->has_addable_red() || !evaluate(*chosen).same_conditions(base);
        }
        if (!chosen) return ReduceStatus::Restart;
        s = std::move(*chosen);
        if (reoptimise) return ReduceStatus::Reoptimise;
    }
}

bool has_good_property(const PartitionState& s, const CycleContext& ctx, Vertex u, std::optional<Vertex> outside) {
    auto singles = ctx.red_singletons();
    if (std::find(singles.begin(), singles.end(), u) == singles.end()) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " is not a red P1 of the cycle");
    }
    if (!outside) {
        auto out = ctx.outside_neighbors(s.graph(), u);
        if (out.empty()) throw std::invalid_argument("red " + std::to_string(u) + " has no outside neighbor");
        outside = out.front();
    }
    PartitionState trial = switch_out(s, ctx, u, *outside);
    AuxiliaryGraph h(trial);
    int comp = h.component_of(*outside);
    if (comp < 0 || h.components()[static_cast<std::size_t>(comp)].bipartite) return true;
    const auto& members = h.components()[static_cast<std::size_t>(comp)].vertices;
    for (Vertex r : ctx.reds) {
        if (r != u && std::binary_search(members.begin(), members.end(), r)) return false;
    }
    return true;
}

bool EliminationTrace::consumed_paths_are_fresh() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].consumed.empty()) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (steps[j].emitted == steps[i].consumed) return false;
        }
    }
    return true;
}

int EliminationTrace::consuming_steps() const {
    return static_cast<int>(
        std::count_if(steps.begin(), steps.end(), [](const EliminationStep& st) { return !st.consumed.empty(); }));
}

const char* to_string(EliminationStatus s) noexcept {
    switch (s) {
        case EliminationStatus::Eliminated: return "eliminated";
        case EliminationStatus::Escalate: return "escalate";
        case EliminationStatus::Reoptimise: return "reoptimise";
        case EliminationStatus::Restart: return "restart";
    }
    return "?";
}

EliminationResult eliminate_last_cycle(const PartitionState& s, const TraceSink& sink) {
    const Graph& g = s.graph();
    EliminationResult result{s, {}, EliminationStatus::Restart, {}};
    PartitionState& state = result.state;
    auto& trace = result.trace;
    AuxiliaryGraph h(state);
    trace.paths_at_entry = h.path_count();
    const int base_components = state.red_component_count();
    Vertex prev_y = -1;

    auto stop = [&](EliminationStatus status, std::string reason) {
        result.status = status;
        result.reason = std::move(reason);
        return result;
    };

    for (int i = 0;; ++i) {
        auto cycles = h.cycle_components();
        if (cycles.empty()) return stop(EliminationStatus::Eliminated, {});
        if (cycles.size() > 1) return stop(EliminationStatus::Escalate, "several cycle components");
        if (trace.consuming_steps() > trace.paths_at_entry) {
            return stop(EliminationStatus::Restart, "more paths consumed than present at entry");
        }
        auto ctx = cycle_context(state, h, cycles.front());
        if (!ctx) return stop(EliminationStatus::Restart, "cycle component without T1/cycle structure");

        struct Candidate {
            PartitionState pre;
            CycleContext ctx;
            Vertex x;
            Vertex y;
            bool rearranged;
        };
        std::vector<Candidate> candidates;
        const bool t2_handoff = ctx->shape == CycleShape::T2 &&
                                std::find(ctx->reds.begin(), ctx->reds.end(), prev_y) != ctx->reds.end();
        if (t2_handoff) {
            const std::size_t len = ctx->ring.size();
            const std::size_t p = ring_position(*ctx, prev_y);
            for (std::size_t q : {(p + 1) % len, (p + len - 1) % len}) {
                try {
                    PartitionState pre = rotate_cycle_pair(state, *ctx, prev_y, ctx->ring[q]);
                    AuxiliaryGraph hp(pre);
                    auto cp = cycle_context(pre, hp, hp.component_of(prev_y));
                    if (!cp) continue;
                    for (Vertex x : cp->red_singletons()) {
                        for (Vertex y : cp->outside_neighbors(g, x)) candidates.push_back({pre, *cp, x, y, true});
                    }
                } catch (const PreconditionError&) {
                }
            }
        } else {
            for (Vertex x : ctx->red_singletons()) {
                if (x == prev_y) continue;
                for (Vertex y : ctx->outside_neighbors(g, x)) candidates.push_back({state, *ctx, x, y, false});
            }
        }

        const Candidate* pick = nullptr;
        PartitionState next = state;
        for (const auto& c : candidates) {
            try {
                if (!has_good_property(c.pre, c.ctx, c.x, c.y)) continue;
                next = switch_out(c.pre, c.ctx, c.x, c.y);
                pick = &c;
                break;
            } catch (const PreconditionError&) {
            } catch (const std::invalid_argument&) {
            }
        }
        if (!pick) {
            return stop(EliminationStatus::Restart,
                        std::string("no red P1 with the good property on ") + to_string(ctx->shape));
        }

        EliminationStep step;
        step.index = i;
        step.x = pick->x;
        step.y = pick->y;
        step.cycle = pick->ctx.reds;
        std::sort(step.cycle.begin(), step.cycle.end());
        step.emitted = without(pick->ctx.reds, pick->x);
        step.rearranged = pick->rearranged;
        step.shape = pick->ctx.shape;

        h.update(next, color_changes(state, next));
        state = std::move(next);
        int comp = h.component_of(step.y);
        if (comp >= 0 && !h.components()[static_cast<std::size_t>(comp)].bipartite) {
            step.consumed = without(h.components()[static_cast<std::size_t>(comp)].vertices, step.y);
        }
        const bool repeats = !step.consumed.empty() &&
                             std::any_of(trace.steps.begin(), trace.steps.end(),
                                         [&](const EliminationStep& prev) { return prev.emitted == step.consumed; });
        trace.steps.push_back(step);
        if (repeats) return stop(EliminationStatus::Restart, "consumed path repeats an emitted path");
        emit(sink, {{"phase", "eliminate"},
                    {"step", i},
                    {"x", step.x},
                    {"y", step.y},
                    {"shape", to_string(step.shape)},
                    {"consumed", step.consumed.empty() ? nlohmann::json(nullptr) : nlohmann::json(step.consumed.front())},
                    {"emitted", step.emitted.empty() ? nlohmann::json(nullptr) : nlohmann::json(step.emitted.front())},
                    {"rearranged", step.rearranged}});

        if (state.has_addable_red() || state.red_component_count() < base_components) {
            if (h.cycle_count() == 0) return stop(EliminationStatus::Eliminated, {});
            return stop(EliminationStatus::Reoptimise, "elimination step improved Condition (I) or (II)");
        }
        prev_y = step.y;
    }
}

PackingColoring finalize_coloring(const PartitionState& s) {
    const Graph& g = s.graph();
    AuxiliaryGraph h(s);
    std::vector<int> classes(g.order(), 0);
    for (std::size_t v = 0; v < g.order(); ++v) {
        Side side = s.side(static_cast<Vertex>(v));
        if (side == Side::One) classes[v] = 1;
        if (side == Side::Two) classes[v] = 2;
    }
    for (const auto& comp : h.components()) {
        std::queue<Vertex> q;
        classes[static_cast<std::size_t>(comp.id())] = 3;
        q.push(comp.id());
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : h.neighbors(v)) {
                int& cw = classes[static_cast<std::size_t>(w)];
                const int want = classes[static_cast<std::size_t>(v)] == 3 ? 4 : 3;
                if (cw == 0) {
                    cw = want;
                    q.push(w);
                } else if (cw != want) {
                    throw PreconditionError("finalize_coloring: H is not bipartite");
                }
            }
        }
    }
    PackingColoring c(PackingSchedule{1, 1, 2, 2}, std::move(classes));
    if (auto bad = verify(g, c)) {
        throw InvariantViolation("finalize_coloring produced an invalid coloring: " + describe(bad));
    }
    return c;
}

// --- driver ----------------------------------------------------------------

const char* to_string(ConstructiveStatus s) noexcept {
    switch (s) {
        case ConstructiveStatus::Colored: return "colored";
        case ConstructiveStatus::Petersen: return "petersen";
        case ConstructiveStatus::Failed: return "failed";
    }
    return "?";
}

namespace {

ConstructiveResult solve_connected(const Graph& g, const ConstructiveOptions& opt) {
    ConstructiveResult result;
    if (is_petersen(g)) {
        result.status = ConstructiveStatus::Petersen;
        return result;
    }
    std::vector<int> bipartition;
    if (g.order() <= 2 || is_bipartite(g, &bipartition)) {
        std::vector<int> classes(g.order());
        for (std::size_t v = 0; v < g.order(); ++v) classes[v] = bipartition.empty() ? static_cast<int>(v) + 1 : bipartition[v] + 1;
        result.coloring = PackingColoring(PackingSchedule{1, 1, 2, 2}, std::move(classes));
        result.status = ConstructiveStatus::Colored;
        emit(opt.trace, {{"phase", "bipartite"}});
        return result;
    }

    const int max_phases = opt.max_phases > 0 ? opt.max_phases : 40 + 4 * static_cast<int>(g.order());
    std::optional<PartitionScore> best_score;
    for (int attempt = 0; attempt <= std::max(0, opt.restarts); ++attempt) {
        const std::uint64_t seed = attempt == 0 ? opt.seed : mix_seed(opt.seed, static_cast<std::uint64_t>(attempt));
        const ConditionOptions cond{opt.exact_cap, seed, opt.switch_depth};
        PartitionState state = initial_partition(g, seed);
        result.stats.restarts_used = attempt;
        std::string reason = "phase bound reached";

        for (int phase = 0; phase < max_phases; ++phase) {
            improve_condition_I(state, cond);
            if (improve_condition_II(state, cond)) continue;

            std::optional<AuxiliaryGraph> h;
            try {
                h.emplace(build_H(state, BuildMode::FixedPoint));
            } catch (const InvariantViolation& e) {
                ++result.stats.rejected_fixed_points;
                reason = std::string("fixed point rejected: ") + e.what();
                break;
            }
            if (h->cycle_count() == 1 && improve_condition_III(state, opt.cycle_search_depth)) {
                emit(opt.trace, {{"phase", "third_condition"}, {"attempt", attempt}, {"score", score_json(evaluate(state))}});
                continue;
            }
            ++result.stats.fixed_points;
            if (opt.on_fixed_point) opt.on_fixed_point(state);
            const PartitionScore score = evaluate(state, *h);
            emit(opt.trace, {{"phase", "fixed_point"}, {"attempt", attempt}, {"score", score_json(score)}});
            if (!best_score || score.better_than(*best_score)) {
                best_score = score;
                result.best = state;
            }

            if (score.cycles == 0) {
                result.coloring = finalize_coloring(state);
                result.status = ConstructiveStatus::Colored;
                return result;
            }
            if (score.cycles >= 2) {
                ++result.stats.reduce_steps;
                auto status = reduce_cycle_count(state, 0, opt.cycle_search_depth);
                emit(opt.trace, {{"phase", "reduce"}, {"attempt", attempt}, {"score", score_json(evaluate(state))}});
                if (status == ReduceStatus::Restart) {
                    reason = "cycle count could not be reduced";
                    break;
                }
                continue;
            }
            auto elim = eliminate_last_cycle(state, opt.trace);
            result.stats.elimination_steps += static_cast<int>(elim.trace.steps.size());
            state = std::move(elim.state);
            if (elim.status == EliminationStatus::Eliminated) {
                result.coloring = finalize_coloring(state);
                result.status = ConstructiveStatus::Colored;
                return result;
            }
            if (elim.status == EliminationStatus::Restart) {
                reason = "elimination: " + elim.reason;
                break;
            }
        }
        result.stats.restart_reasons.push_back(reason);
        emit(opt.trace, {{"phase", "restart"}, {"attempt", attempt}, {"reason", reason}});
    }
    result.status = ConstructiveStatus::Failed;
    return result;
}

}  // namespace

ConstructiveResult solve_1122(const Graph& g, const ConstructiveOptions& opt) {
    if (!g.is_subcubic()) throw std::invalid_argument("solve_1122: graph is not subcubic");
    auto comps = connected_components(g);
    if (comps.size() <= 1) return solve_connected(g, opt);

    ConstructiveResult merged;
    merged.status = ConstructiveStatus::Colored;
    std::vector<int> classes(g.order(), 0);
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        ConstructiveResult part = solve_connected(sub, opt);
        merged.stats.fixed_points += part.stats.fixed_points;
        merged.stats.rejected_fixed_points += part.stats.rejected_fixed_points;
        merged.stats.reduce_steps += part.stats.reduce_steps;
        merged.stats.elimination_steps += part.stats.elimination_steps;
        merged.stats.restarts_used = std::max(merged.stats.restarts_used, part.stats.restarts_used);
        for (auto& r : part.stats.restart_reasons) merged.stats.restart_reasons.push_back(std::move(r));
        if (part.status == ConstructiveStatus::Petersen) {
            merged.status = ConstructiveStatus::Petersen;
        } else if (part.status == ConstructiveStatus::Failed && merged.status == ConstructiveStatus::Colored) {
            merged.status = ConstructiveStatus::Failed;
        }
        if (part.coloring) {
            for (std::size_t i = 0; i < comp.size(); ++i) {
                classes[static_cast<std::size_t>(comp[i])] = part.coloring->class_of(static_cast<Vertex>(i));
            }
        }
    }
    if (merged.status == ConstructiveStatus::Colored) {
        merged.coloring = PackingColoring(PackingSchedule{1, 1, 2, 2}, std::move(classes));
        if (auto bad = verify(g, *merged.coloring)) {
            throw InvariantViolation("merged coloring is invalid: " + describe(bad));
        }
    }
    return merged;
}

}  // namespace packcolor

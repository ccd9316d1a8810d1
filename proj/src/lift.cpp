#include "packcolor/lift.hpp"

#include "packcolor/generators.hpp"
#include "packcolor/partition.hpp"

namespace packcolor {

PackingSchedule subdivision_schedule() { return PackingSchedule{1, 2, 3, 4, 5}; }

const char* to_string(SubdivisionStatus s) noexcept {
    switch (s) {
        case SubdivisionStatus::Colored: return "colored";
        case SubdivisionStatus::BudgetExceeded: return "budget";
        case SubdivisionStatus::Failed: return "failed";
    }
    return "?";
}

LiftedColoring lift_coloring(const SubdivisionMap& map, const PackingColoring& c) {
    const Graph& g = map.original();
    if (c.schedule() != PackingSchedule{1, 1, 2, 2}) {
        throw PreconditionError("lift_coloring expects a (1,1,2,2)-coloring");
    }
    if (c.order() != g.order() || !c.is_total() || verify(g, c)) {
        throw PreconditionError("lift_coloring: source coloring is not valid on the original graph");
    }
    const Graph& sg = map.subdivided();
    std::vector<int> classes(sg.order(), 1);
    for (std::size_t v = 0; v < g.order(); ++v) {
        classes[static_cast<std::size_t>(map.image(static_cast<Vertex>(v)))] = c.class_of(static_cast<Vertex>(v)) + 1;
    }
    LiftedColoring out{&map, PackingColoring(subdivision_schedule(), std::move(classes))};
    if (auto bad = verify(sg, out.coloring)) {
        throw InvariantViolation("lifted coloring is invalid: " + describe(bad));
    }
    return out;
}

SubdivisionOutcome pcn5_subdivision(const SubdivisionMap& map, std::uint64_t budget, const ConstructiveOptions& opt) {
    const Graph& g = map.original();
    const Graph& sg = map.subdivided();
    SubdivisionOutcome out;
    std::vector<int> classes(sg.order(), 0);

    for (const auto& comp : connected_components(g)) {
        SubdivisionMap local(induced_subgraph(g, comp));
        // Local id -> id in S(G): originals via comp, midpoints via their edge.
        auto to_global = [&](Vertex s) {
            if (auto e = local.edge_of(s)) {
                return map.midpoint(comp[static_cast<std::size_t>(e->u)], comp[static_cast<std::size_t>(e->v)]);
            }
            return map.image(comp[static_cast<std::size_t>(s)]);
        };
        std::optional<PackingColoring> part;
        if (is_petersen(local.original())) {
            ++out.petersen_components;
            auto res = solve_exact(local.subdivided(), subdivision_schedule(), budget);
            out.exact_nodes += res.nodes;
            if (res.status == SolveStatus::BudgetExceeded) {
                out.status = SubdivisionStatus::BudgetExceeded;
                return out;
            }
            if (res.status == SolveStatus::Unsat) {
                throw InvariantViolation("subdivided Petersen graph reported (1,2,3,4,5)-uncolorable");
            }
            part = std::move(res.coloring);
        } else {
            auto res = solve_1122(local.original(), opt);
            out.stats.fixed_points += res.stats.fixed_points;
            out.stats.rejected_fixed_points += res.stats.rejected_fixed_points;
            out.stats.restarts_used = std::max(out.stats.restarts_used, res.stats.restarts_used);
            if (res.status != ConstructiveStatus::Colored) {
                out.status = SubdivisionStatus::Failed;
                return out;
            }
            part = lift_coloring(local, *res.coloring).coloring;
        }
        for (std::size_t s = 0; s < local.subdivided().order(); ++s) {
            classes[static_cast<std::size_t>(to_global(static_cast<Vertex>(s)))] = part->class_of(static_cast<Vertex>(s));
        }
    }
    out.coloring = PackingColoring(subdivision_schedule(), std::move(classes));
    if (auto bad = verify(sg, *out.coloring)) {
        throw InvariantViolation("subdivision coloring is invalid: " + describe(bad));
    }
    out.status = SubdivisionStatus::Colored;
    return out;
}

}  // namespace packcolor

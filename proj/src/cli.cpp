#include "packcolor/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "packcolor/certificate.hpp"
#include "packcolor/constructive.hpp"
#include "packcolor/corpus.hpp"
#include "packcolor/exact.hpp"
#include "packcolor/generators.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/lift.hpp"
#include "packcolor/rng.hpp"
#include "packcolor/subdivision.hpp"

namespace packcolor {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string path;
    std::string named;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "graph file (graph6 lines or edge list); stdin when omitted");
        cmd->add_option("--named", named, "named graph, e.g. petersen, k4, cycle(6), prism(5)");
    }

    Graph load(std::istream& in) const {
        try {
            if (!named.empty()) return named_graph(named);
            std::string text;
            if (!path.empty()) {
                std::ifstream file(path);
                if (!file) throw InputError("cannot open " + path);
                text.assign(std::istreambuf_iterator<char>(file), {});
            } else {
                text.assign(std::istreambuf_iterator<char>(in), {});
            }
            auto graphs = parse_graph_text(text);
            if (graphs.size() != 1) {
                throw InputError("expected exactly one graph, got " + std::to_string(graphs.size()));
            }
            return std::move(graphs.front());
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PACKCOLOR_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("PACKCOLOR_SEED is not an integer: ") + env);
        }
    }
    return 0;
}

void require_subcubic(const Graph& g) {
    if (!g.is_subcubic()) throw InputError("graph is not subcubic");
}

// Every certificate goes through verify() once more right before printing.
void print_certificate(std::ostream& out, const Graph& g, const PackingColoring& c, nlohmann::json doc) {
    if (auto bad = verify(g, c)) throw std::logic_error("refusing to print an invalid certificate: " + describe(bad));
    out << doc.dump() << '\n';
}

PackingSchedule parse_schedule(const std::string& text) {
    try {
        return PackingSchedule::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("bad schedule: ") + e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Packing colorings of subcubic graphs and their subdivisions", "packcolor"};
    app.require_subcommand(1);

    // verify
    GraphSource verify_src;
    std::string coloring_path;
    std::string verify_schedule;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring certificate against a graph");
    verify_src.attach(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_path, "certificate JSON file")->required();
    verify_cmd->add_option("--schedule", verify_schedule, "override the certificate's schedule");

    // solve
    GraphSource solve_src;
    std::optional<std::uint64_t> solve_seed;
    int restarts = 64;
    std::string trace_path;
    auto* solve_cmd = app.add_subcommand("solve", "packing (1,1,2,2)-coloring by the constructive procedure");
    solve_src.attach(solve_cmd);
    solve_cmd->add_option("--seed", solve_seed, "seed (default: PACKCOLOR_SEED or 0)");
    solve_cmd->add_option("--restarts", restarts, "reseeded attempts after the first")->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--trace", trace_path, "write JSON-lines trace here");

    // exact
    GraphSource exact_src;
    std::string exact_schedule;
    std::uint64_t budget = kDefaultNodeBudget;
    auto* exact_cmd = app.add_subcommand("exact", "exact search for a packing S-coloring");
    exact_src.attach(exact_cmd);
    exact_cmd->add_option("--schedule", exact_schedule, "e.g. 1,1,2,2 or 1^2,2^3")->required();
    exact_cmd->add_option("--budget", budget, "search node budget");

    // pcn
    GraphSource pcn_src;
    int k_max = 12;
    auto* pcn_cmd = app.add_subcommand("pcn", "packing chromatic number by exact search");
    pcn_src.attach(pcn_cmd);
    pcn_cmd->add_option("--kmax", k_max, "largest k tried")->check(CLI::PositiveNumber);
    pcn_cmd->add_option("--budget", budget, "node budget per k");

    // subdivide
    GraphSource sub_src;
    bool color = false;
    auto* sub_cmd = app.add_subcommand("subdivide", "1-subdivision, optionally with a (1,2,3,4,5)-coloring");
    sub_src.attach(sub_cmd);
    sub_cmd->add_flag("--color", color, "color the subdivision");
    sub_cmd->add_option("--budget", budget, "node budget for Petersen components");
    sub_cmd->add_option("--seed", solve_seed, "seed for the constructive solver");

    // gen
    std::size_t gen_n = 10;
    std::size_t gen_count = 1;
    std::optional<std::uint64_t> gen_seed;
    std::string gen_named;
    auto* gen_cmd = app.add_subcommand("gen", "random connected cubic graphs as graph6 lines");
    gen_cmd->add_option("--n", gen_n, "order (even, >= 4)");
    gen_cmd->add_option("--count", gen_count, "number of graphs");
    gen_cmd->add_option("--seed", gen_seed, "seed (default: PACKCOLOR_SEED or 0)");
    gen_cmd->add_option("--named", gen_named, "print a named graph instead");

    // enum
    std::size_t enum_n = 6;
    std::size_t enum_cap = kDefaultEnumerationCap;
    auto* enum_cmd = app.add_subcommand("enum", "connected subcubic graphs up to isomorphism");
    enum_cmd->add_option("--n-max", enum_n, "largest order")->check(CLI::PositiveNumber);
    enum_cmd->add_option("--cap", enum_cap, "refuse orders above this");

    // corpus
    std::string source = "enum";
    std::size_t n_min = 10;
    std::optional<std::size_t> n_max;
    std::size_t count = 500;
    std::optional<std::uint64_t> corpus_seed;
    unsigned jobs = 1;
    bool lift = false;
    bool check = false;
    bool json = false;
    auto* corpus_cmd = app.add_subcommand("corpus", "run the solver over a corpus and report");
    corpus_cmd->add_option("--source", source, "enum or random")->check(CLI::IsMember({"enum", "random"}));
    corpus_cmd->add_option("--n-min", n_min, "random: smallest order");
    corpus_cmd->add_option("--n-max", n_max, "largest order (enum default 8, random default 24)");
    corpus_cmd->add_option("--count", count, "random: number of graphs");
    corpus_cmd->add_option("--seed", corpus_seed, "corpus seed (default: PACKCOLOR_SEED or 0)");
    corpus_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    corpus_cmd->add_option("--restarts", restarts, "solver restarts");
    corpus_cmd->add_flag("--lift", lift, "also lift every coloring to the subdivision");
    corpus_cmd->add_flag("--check-invariants", check, "run the invariant battery on every fixed point");
    corpus_cmd->add_flag("--json", json, "print the JSON report instead of the table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (verify_cmd->parsed()) {
            Graph g = verify_src.load(in);
            nlohmann::json doc;
            {
                std::ifstream file(coloring_path);
                if (!file) throw InputError("cannot open " + coloring_path);
                try {
                    doc = nlohmann::json::parse(file);
                } catch (const nlohmann::json::exception& e) {
                    throw InputError(std::string("malformed certificate: ") + e.what());
                }
            }
            PackingColoring c = [&] {
                try {
                    return coloring_from_json(doc, g.order());
                } catch (const std::exception& e) {
                    throw InputError(std::string("malformed certificate: ") + e.what());
                }
            }();
            if (!verify_schedule.empty()) c = PackingColoring(parse_schedule(verify_schedule), c.assignment());
            auto verdict = verify(g, c);
            out << describe(verdict) << '\n';
            return verdict ? kExitInvalid : kExitOk;
        }

        if (solve_cmd->parsed()) {
            Graph g = solve_src.load(in);
            require_subcubic(g);
            if (!is_connected(g)) throw InputError("graph is not connected");
            ConstructiveOptions opt;
            opt.seed = solve_seed.value_or(default_seed());
            opt.restarts = restarts;
            std::ofstream trace;
            if (!trace_path.empty()) {
                trace.open(trace_path);
                if (!trace) throw InputError("cannot write " + trace_path);
                opt.trace = [&trace](const nlohmann::json& rec) { trace << rec.dump() << '\n'; };
            }
            auto res = solve_1122(g, opt);
            if (res.status == ConstructiveStatus::Petersen) {
                out << "PETERSEN\n";
                return kExitOk;
            }
            if (res.status == ConstructiveStatus::Failed) {
                err << "all " << restarts + 1 << " attempts failed\n";
                if (res.best) {
                    auto sc = evaluate(*res.best);
                    err << "best state " << res.best->encode() << " black=" << sc.black
                        << " red_components=" << sc.red_components << " cycles=" << sc.cycles << '\n';
                }
                for (const auto& r : res.stats.restart_reasons) err << "  " << r << '\n';
                return kExitRestartsExhausted;
            }
            print_certificate(out, g, *res.coloring, certificate_json(g, *res.coloring));
            return kExitOk;
        }

        if (exact_cmd->parsed()) {
            Graph g = exact_src.load(in);
            auto res = solve_exact(g, parse_schedule(exact_schedule), budget);
            switch (res.status) {
                case SolveStatus::Sat:
                    print_certificate(out, g, *res.coloring, certificate_json(g, *res.coloring));
                    return kExitOk;
                case SolveStatus::Unsat:
                    out << "UNSAT\n";
                    return kExitOk;
                case SolveStatus::BudgetExceeded:
                    out << "BUDGET\n";
                    return kExitBudget;
            }
        }

        if (pcn_cmd->parsed()) {
            Graph g = pcn_src.load(in);
            auto res = pcn(g, k_max, budget);
            nlohmann::json doc;
            doc["pcn"] = res.value ? nlohmann::json(*res.value) : nlohmann::json(nullptr);
            doc["per_k"] = nlohmann::json::array();
            for (auto st : res.per_k) doc["per_k"].push_back(to_string(st));
            if (res.witness) {
                if (auto bad = verify(g, *res.witness)) {
                    throw std::logic_error("refusing to print an invalid certificate: " + describe(bad));
                }
                doc["certificate"] = certificate_json(g, *res.witness);
            }
            out << doc.dump() << '\n';
            bool budget_hit = std::find(res.per_k.begin(), res.per_k.end(), SolveStatus::BudgetExceeded) != res.per_k.end();
            return !res.value && budget_hit ? kExitBudget : kExitOk;
        }

        if (sub_cmd->parsed()) {
            Graph g = sub_src.load(in);
            require_subcubic(g);
            SubdivisionMap map(g);
            if (!color) {
                out << emit_graph6(map.subdivided()) << '\n';
                return kExitOk;
            }
            ConstructiveOptions opt;
            opt.seed = solve_seed.value_or(default_seed());
            auto res = pcn5_subdivision(map, budget, opt);
            if (res.status == SubdivisionStatus::BudgetExceeded) {
                out << "BUDGET\n";
                return kExitBudget;
            }
            if (res.status == SubdivisionStatus::Failed) {
                err << "constructive solver exhausted its restarts\n";
                return kExitRestartsExhausted;
            }
            auto doc = lifted_certificate_json(map, *res.coloring);
            doc["graph6"] = emit_graph6(map.subdivided());
            print_certificate(out, map.subdivided(), *res.coloring, std::move(doc));
            return kExitOk;
        }

        if (gen_cmd->parsed()) {
            if (!gen_named.empty()) {
                out << emit_graph6(named_graph(gen_named)) << '\n';
                return kExitOk;
            }
            const std::uint64_t seed = gen_seed.value_or(default_seed());
            for (std::size_t i = 0; i < gen_count; ++i) {
                out << emit_graph6(generate_random_cubic(gen_n, gen_count == 1 ? seed : mix_seed(seed, i))) << '\n';
            }
            return kExitOk;
        }

        if (enum_cmd->parsed()) {
            for_each_connected_subcubic(enum_n, [&](const Graph& g) { out << emit_graph6(g) << '\n'; }, enum_cap);
            return kExitOk;
        }

        if (corpus_cmd->parsed()) {
            std::vector<Graph> graphs;
            if (source == "enum") {
                graphs = enumerate_connected_subcubic(n_max.value_or(8));
            } else {
                graphs = random_cubic_corpus(count, n_min, n_max.value_or(24), corpus_seed.value_or(default_seed()));
            }
            CorpusOptions opt;
            opt.solver.seed = default_seed();
            opt.solver.restarts = restarts;
            opt.lift = lift;
            opt.check_invariants = check;
            opt.jobs = jobs;
            auto report = run_corpus(graphs, opt);
            if (json) {
                out << report.to_json().dump() << '\n';
            } else {
                out << report.table();
            }
            return report.failures.empty() && report.invariant_violations == 0 ? kExitOk : kExitRestartsExhausted;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const UnsupportedError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace packcolor

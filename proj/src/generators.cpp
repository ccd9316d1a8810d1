#include "packcolor/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <stdexcept>

#include "packcolor/distance.hpp"
#include "packcolor/graph_io.hpp"
#include "packcolor/rng.hpp"

namespace packcolor {

Graph generate_random_cubic(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("generate_random_cubic: n must be even and >= 4");
    }
    Rng rng(seed);
    std::vector<Vertex> points(3 * n);
    for (;;) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
        rng.shuffle(std::span<Vertex>(points));
        std::vector<Edge> edges;
        edges.reserve(points.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            Vertex a = std::min(points[i], points[i + 1]);
            Vertex b = std::max(points[i], points[i + 1]);
            if (a == b) simple = false;
            edges.push_back({a, b});
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

Graph cycle_graph(std::size_t k) {
    if (k < 3) throw std::invalid_argument("cycle(k) requires k >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        Vertex a = static_cast<Vertex>(i);
        Vertex b = static_cast<Vertex>((i + 1) % k);
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(k, edges);
}

Graph path_graph(std::size_t k) {
    if (k < 1) throw std::invalid_argument("path(k) requires k >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    }
    return Graph(k, edges);
}

Graph complete_graph(std::size_t k) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
    return Graph(k, edges);
}

Graph prism_graph(std::size_t k) {
    if (k < 3) throw std::invalid_argument("prism(k) requires k >= 3");
    std::vector<Edge> edges;
    const auto kk = static_cast<Vertex>(k);
    for (Vertex i = 0; i < kk; ++i) {
        Vertex j = (i + 1) % kk;
        edges.push_back({std::min(i, j), std::max(i, j)});
        edges.push_back({std::min(i, j) + kk, std::max(i, j) + kk});
        edges.push_back({i, i + kk});
    }
    return Graph(2 * k, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        edges.push_back({i, i + 5});
        Vertex a = 5 + i;
        Vertex b = 5 + (i + 2) % 5;
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(10, edges);
}

namespace {

Graph k33_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 3; ++i) {
        for (Vertex j = 3; j < 6; ++j) edges.push_back({i, j});
    }
    return Graph(6, edges);
}

// Splits "cycle(5)", "cycle5" or "cycle:5" into ("cycle", 5).
std::pair<std::string, std::size_t> split_parameter(std::string_view name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::size_t cut = lower.find_first_of("(:0123456789");
    if (cut == std::string::npos) return {lower, 0};
    std::string base = lower.substr(0, cut);
    std::string digits;
    for (std::size_t i = cut; i < lower.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(lower[i]))) {
            digits.push_back(lower[i]);
        } else if (lower[i] != '(' && lower[i] != ')' && lower[i] != ':') {
            throw std::invalid_argument("malformed graph name: " + std::string(name));
        }
    }
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("malformed graph name: " + std::string(name));
    }
    return {base, k};
}

}  // namespace

Graph named_graph(std::string_view name) {
    auto [base, k] = split_parameter(name);
    if (base == "petersen") return petersen_graph();
    if (base == "k33") return k33_graph();
    if (base == "k" && k == 33) return k33_graph();
    if (base == "k" && k >= 1 && k <= 4) return complete_graph(k);
    if (base == "cycle" || base == "c") return cycle_graph(k);
    if (base == "path" || base == "p") return path_graph(k);
    if (base == "prism") return prism_graph(k);
    throw std::invalid_argument("unknown graph name: " + std::string(name));
}

bool is_petersen(const Graph& g) {
    return g.order() == 10 && g.is_regular(3) && girth(g) == 5;
}

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(n_, 0) {
        if (n_ > 31) throw UnsupportedError("canonical_form: order above 31 is not supported");
        for (std::size_t v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(static_cast<Vertex>(v))) adj_[v] |= 1u << w;
        }
        perm_.resize(n_);
        cur_.resize(n_);
        best_.resize(n_);
        status_.assign(n_ + 1, 0);
    }

    std::string run() {
        if (n_ > 0) search(0, 0u);
        std::vector<Edge> edges;
        for (std::size_t j = 1; j < n_; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                if (best_[j] >> (j - 1 - i) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
        return emit_graph6(Graph(n_, edges));
    }

private:
    // status_[j] compares the placed prefix of length j with best_: -1 when
    // already smaller, 0 when equal (always -1 before the first leaf).
    void search(std::size_t depth, std::uint32_t used) {
        if (depth == n_) {
            if (!has_best_ || status_[depth] < 0) {
                best_ = cur_;
                has_best_ = true;
                std::fill(status_.begin(), status_.end(), 0);
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used >> v & 1u) continue;
            std::uint32_t seg = 0;
            for (std::size_t i = 0; i < depth; ++i) {
                seg = (seg << 1) | (adj_[static_cast<std::size_t>(perm_[i])] >> v & 1u);
            }
            int child = -1;
            if (has_best_ && status_[depth] == 0) {
                if (seg > best_[depth]) continue;
                child = seg < best_[depth] ? -1 : 0;
            }
            perm_[depth] = static_cast<Vertex>(v);
            cur_[depth] = seg;
            status_[depth + 1] = child;
            search(depth + 1, used | (1u << v));
        }
    }

    std::size_t n_;
    std::vector<std::uint32_t> adj_;
    std::vector<Vertex> perm_;
    std::vector<std::uint32_t> cur_;
    std::vector<std::uint32_t> best_;
    std::vector<int> status_;
    bool has_best_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g) { return CanonicalSearch(g).run(); }

void for_each_connected_subcubic(std::size_t n_max, const std::function<void(const Graph&)>& visit,
                                 std::size_t cap) {
    if (n_max > cap) {
        throw UnsupportedError("enumerate_connected_subcubic: n_max " + std::to_string(n_max) +
                               " exceeds cap " + std::to_string(cap));
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::set<std::string> level{canonical_form(Graph(n))};
        std::set<std::string> connected;
        while (!level.empty()) {
            std::set<std::string> next;
            for (const auto& code : level) {
                Graph g = parse_graph6(code);
                if (is_connected(g)) connected.insert(code);
                auto edges = g.edges();
                for (std::size_t j = 1; j < n; ++j) {
                    for (std::size_t i = 0; i < j; ++i) {
                        auto a = static_cast<Vertex>(i);
                        auto b = static_cast<Vertex>(j);
                        if (g.degree(a) >= 3 || g.degree(b) >= 3 || g.adjacent(a, b)) continue;
                        auto grown = edges;
                        grown.push_back({a, b});
                        next.insert(canonical_form(Graph(n, grown)));
                    }
                }
            }
            level = std::move(next);
        }
        for (const auto& code : connected) visit(parse_graph6(code));
    }
}

std::vector<Graph> enumerate_connected_subcubic(std::size_t n_max, std::size_t cap) {
    std::vector<Graph> out;
    for_each_connected_subcubic(n_max, [&](const Graph& g) { out.push_back(g); }, cap);
    return out;
}

}  // namespace packcolor

#include "packcolor/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace packcolor {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

int sextet(std::string_view s, std::size_t pos, std::size_t base_offset) {
    if (pos >= s.size()) {
        throw ParseError("graph6: unexpected end of input", base_offset + pos);
    }
    int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > kBias + 63) {
        throw ParseError("graph6: byte out of range", base_offset + pos);
    }
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kGraph6Header)) {
        text.remove_prefix(kGraph6Header.size());
        base = kGraph6Header.size();
    }
    text = trim(text);
    if (text.empty()) throw ParseError("graph6: empty input", base);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(sextet(text, 0, base));
        pos = 1;
    } else if (text.size() > 1 && text[1] == '~') {
        throw UnsupportedError("graph6: 8-byte size header (n > 258047) is not supported");
    } else {
        for (std::size_t i = 1; i <= 3; ++i) {
            n = (n << 6) | static_cast<std::size_t>(sextet(text, i, base));
        }
        pos = 4;
        if (n < 63) throw ParseError("graph6: long size header used for n < 63", base + 1);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() != pos + bytes) {
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                             std::to_string(text.size() >= pos ? text.size() - pos : 0),
                         base + std::min(text.size(), pos + bytes));
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int byte = sextet(text, pos + k / 6, base);
            if (byte & (1 << (5 - static_cast<int>(k % 6)))) {
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
            }
        }
    }
    for (std::size_t b = pos; b < text.size(); ++b) sextet(text, b, base);
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kGraph6MaxOrder) {
        throw UnsupportedError("graph6: order " + std::to_string(n) + " exceeds " +
                               std::to_string(kGraph6MaxOrder));
    }
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<unsigned char> sextets((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
                sextets[k / 6] |= static_cast<unsigned char>(1 << (5 - k % 6));
            }
        }
    }
    for (unsigned char s : sextets) out.push_back(static_cast<char>(s + kBias));
    return out;
}

LabeledGraph parse_edge_list(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    {
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            auto t = trim(line);
            if (t.empty() || t.front() == '#') {
                lines.emplace_back();
                continue;
            }
            std::istringstream ls{std::string(t)};
            std::vector<std::string> tokens;
            for (std::string tok; ls >> tok;) tokens.push_back(tok);
            lines.push_back(std::move(tokens));
        }
    }

    std::size_t header = 0;
    while (header < lines.size() && lines[header].empty()) ++header;
    if (header == lines.size()) throw ParseError("edge list: missing header", 0);

    auto to_int = [](const std::string& s, long long& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };

    long long n = 0;
    long long m = 0;
    if (lines[header].size() != 2 || !to_int(lines[header][0], n) || !to_int(lines[header][1], m) || n < 0 ||
        m < 0) {
        throw ParseError("edge list: header must be \"n m\"", header + 1);
    }

    std::vector<std::pair<std::string, std::string>> raw;
    std::vector<std::size_t> line_of;
    for (std::size_t i = header + 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        if (lines[i].size() != 2) throw ParseError("edge list: expected \"u v\"", i + 1);
        raw.emplace_back(lines[i][0], lines[i][1]);
        line_of.push_back(i + 1);
    }
    if (static_cast<long long>(raw.size()) != m) {
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(raw.size()),
                         header + 1);
    }

    bool numeric = true;
    for (const auto& [a, b] : raw) {
        long long x = 0;
        long long y = 0;
        if (!to_int(a, x) || !to_int(b, y) || x < 0 || y < 0 || x >= n || y >= n) {
            numeric = false;
            break;
        }
    }

    LabeledGraph result;
    result.labels.resize(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    if (numeric) {
        for (std::size_t v = 0; v < result.labels.size(); ++v) result.labels[v] = std::to_string(v);
        for (const auto& [a, b] : raw) {
            long long x = 0;
            long long y = 0;
            to_int(a, x);
            to_int(b, y);
            edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y)});
        }
    } else {
        std::unordered_map<std::string, Vertex> ids;
        auto id_of = [&](const std::string& label, std::size_t line) {
            auto it = ids.find(label);
            if (it != ids.end()) return it->second;
            auto next = static_cast<Vertex>(ids.size());
            if (next >= n) throw ParseError("edge list: more distinct labels than n", line);
            ids.emplace(label, next);
            result.labels[static_cast<std::size_t>(next)] = label;
            return next;
        };
        for (std::size_t i = 0; i < raw.size(); ++i) {
            Vertex x = id_of(raw[i].first, line_of[i]);
            Vertex y = id_of(raw[i].second, line_of[i]);
            edges.push_back({x, y});
        }
        for (std::size_t v = ids.size(); v < result.labels.size(); ++v) {
            result.labels[v] = "#" + std::to_string(v);
        }
    }
    try {
        result.graph = Graph(static_cast<std::size_t>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("edge list: ") + e.what(), header + 1);
    }
    return result;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<Graph> parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string first;
    while (std::getline(in, first) && trim(first).empty()) {
    }
    auto t = trim(first);
    bool edge_list = !t.empty() && std::isdigit(static_cast<unsigned char>(t.front())) &&
                     t.find(' ') != std::string_view::npos;
    if (edge_list) return {parse_edge_list(text).graph};
    std::istringstream all{std::string(text)};
    return read_graph6_stream(all);
}

}  // namespace packcolor

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "packcolor/graph.hpp"

namespace packcolor {

/// Malformed textual graph input. offset() is the byte position of the
/// offending character within the line (or the line number for edge lists).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest order expressible with the 4-byte graph6 size header.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted.
[[nodiscard]] Graph parse_graph6(std::string_view text);

/// Encodes g in graph6 (labelled form, zero padding bits).
[[nodiscard]] std::string emit_graph6(const Graph& g);

/// A graph read from an edge list together with the original vertex labels.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  ///< labels[v] is the input token for dense id v
};

/// Edge-list text: a header line "n m" followed by m lines "u v".
/// Tokens that are all integers in [0, n) are used as ids directly; otherwise
/// labels are assigned dense ids in order of first appearance.
[[nodiscard]] LabeledGraph parse_edge_list(std::string_view text);
[[nodiscard]] std::string emit_edge_list(const Graph& g);

/// Reads every non-empty line of a stream as graph6.
[[nodiscard]] std::vector<Graph> read_graph6_stream(std::istream& in);

/// Auto-detects graph6 (one or more lines) versus edge-list text and
/// returns all graphs found.
[[nodiscard]] std::vector<Graph> parse_graph_text(std::string_view text);

}  // namespace packcolor

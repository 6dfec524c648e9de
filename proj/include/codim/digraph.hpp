#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "codim/errors.hpp"

namespace codim {

using Vertex = int;

// Simple directed graph with labeled vertices and out-adjacency lists.
// No self-loops, no duplicate edges; labels are pairwise distinct.
// Immutable in spirit: construct once, then share read-only.
class Digraph {
public:
    Digraph() = default;

    // Throws std::invalid_argument if the label already exists or is empty.
    Vertex add_vertex(std::string label);

    // Returns the existing vertex for `label`, or creates one.
    Vertex ensure_vertex(std::string_view label);

    // Duplicate edges are ignored. Throws std::invalid_argument on
    // self-loops or out-of-range endpoints.
    void add_edge(Vertex from, Vertex to);

    int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
    std::size_t edge_count() const noexcept { return edge_set_.size(); }

    bool has_edge(Vertex from, Vertex to) const;
    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::optional<Vertex> find_vertex(std::string_view label) const;

private:
    static std::uint64_t edge_key(Vertex from, Vertex to) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
               static_cast<std::uint32_t>(to);
    }

    std::vector<std::string> labels_;
    std::vector<std::vector<Vertex>> out_;
    std::unordered_map<std::string, Vertex> index_;
    std::unordered_set<std::uint64_t> edge_set_;
};

// All-pairs shortest-path lengths. An unreachable pair has no value;
// undefined distances take part in no comparison.
class DistanceTable {
public:
    explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n) {}

    std::optional<int>& at(Vertex from, Vertex to) {
        return d_[static_cast<std::size_t>(from) * n_ + to];
    }
    const std::optional<int>& at(Vertex from, Vertex to) const {
        return d_[static_cast<std::size_t>(from) * n_ + to];
    }
    int size() const noexcept { return n_; }
    bool all_defined() const;

private:
    int n_;
    std::vector<std::optional<int>> d_;
};

// Parses an edge-list document: one `src dst` pair per line,
// whitespace-separated, `#` starts a comment, blank lines ignored.
// Vertices appear in first-mention order; duplicate edges collapse.
// Throws ParseError (with line number) on self-loops and malformed lines.
Digraph from_edge_list(std::string_view text);

// Single-source BFS; returns one distance row (nullopt where unreachable).
std::vector<std::optional<int>> bfs_distances(const Digraph& g, Vertex source);

DistanceTable distance_table(const Digraph& g);

// True iff every ordered pair is connected by a path. Requires n >= 1.
bool is_strongly_connected(const Digraph& g);

bool is_acyclic(const Digraph& g);

// DOT document: one quoted node statement per vertex, one edge statement per edge.
std::string to_dot(const Digraph& g);

// Edge-list document; a `# vertices:` header comment records isolated vertices.
std::string to_edge_list(const Digraph& g);

} // namespace codim

#include "codim/digraph.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace codim {

Vertex Digraph::add_vertex(std::string label) {
    if (label.empty())
        throw std::invalid_argument("vertex label must be non-empty");
    if (index_.count(label))
        throw std::invalid_argument("duplicate vertex label: " + label);
    Vertex v = static_cast<Vertex>(labels_.size());
    index_.emplace(label, v);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    return v;
}

Vertex Digraph::ensure_vertex(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end())
        return it->second;
    return add_vertex(std::string(label));
}

void Digraph::add_edge(Vertex from, Vertex to) {
    const int n = vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("edge endpoint out of range");
    if (from == to)
        throw std::invalid_argument("self-loops are not allowed");
    if (edge_set_.insert(edge_key(from, to)).second)
        out_[from].push_back(to);
}

bool Digraph::has_edge(Vertex from, Vertex to) const {
    return edge_set_.count(edge_key(from, to)) != 0;
}

std::optional<Vertex> Digraph::find_vertex(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool DistanceTable::all_defined() const {
    for (const auto& e : d_)
        if (!e.has_value())
            return false;
    return true;
}

namespace {

// Strips a trailing `#` comment and returns the remaining payload.
std::string_view strip_comment(std::string_view line) {
    auto pos = line.find('#');
    if (pos != std::string_view::npos)
        line = line.substr(0, pos);
    return line;
}

} // namespace

Digraph from_edge_list(std::string_view text) {
    Digraph g;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string payload(strip_comment(text.substr(start, end - start)));
        start = end + 1;

        std::istringstream iss(payload);
        std::string src, dst, extra;
        if (!(iss >> src))
            continue; // blank or comment-only line
        if (!(iss >> dst) || (iss >> extra))
            throw ParseError("malformed edge at line " + std::to_string(line_no) +
                             ": expected '<src> <dst>'");
        if (src == dst)
            throw ParseError("self-loop at line " + std::to_string(line_no));
        const Vertex from = g.ensure_vertex(src); // sequenced: first-appearance order
        const Vertex to = g.ensure_vertex(dst);
        g.add_edge(from, to);
        if (end == text.size())
            break;
    }
    return g;
}

std::vector<std::optional<int>> bfs_distances(const Digraph& g, Vertex source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n)
        throw std::invalid_argument("BFS source out of range");
    std::vector<std::optional<int>> dist(n);
    dist[source] = 0;
    std::deque<Vertex> queue{source};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.out_neighbors(u)) {
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceTable distance_table(const Digraph& g) {
    const int n = g.vertex_count();
    DistanceTable table(n);
    for (Vertex w = 0; w < n; ++w) {
        auto row = bfs_distances(g, w);
        for (Vertex u = 0; u < n; ++u)
            table.at(w, u) = row[u];
    }
    return table;
}

bool is_strongly_connected(const Digraph& g) {
    const int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("strong connectivity needs at least one vertex");
    auto forward = bfs_distances(g, 0);
    for (Vertex v = 0; v < n; ++v)
        if (!forward[v])
            return false;
    // reverse reachability from vertex 0
    std::vector<std::vector<Vertex>> rin(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.out_neighbors(u))
            rin[v].push_back(u);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    std::deque<Vertex> queue{0};
    int reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : rin[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n;
}

bool is_acyclic(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.out_neighbors(u))
            ++indeg[v];
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        ++removed;
        for (Vertex v : g.out_neighbors(u))
            if (--indeg[v] == 0)
                queue.push_back(v);
    }
    return removed == n;
}

std::string to_dot(const Digraph& g) {
    std::string out = "digraph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out += "  \"" + g.label(v) + "\";\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.out_neighbors(u))
            out += "  \"" + g.label(u) + "\" -> \"" + g.label(v) + "\";\n";
    out += "}\n";
    return out;
}

std::string to_edge_list(const Digraph& g) {
    std::string out = "# vertices:";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out += " " + g.label(v);
    out += "\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.out_neighbors(u))
            out += g.label(u) + " " + g.label(v) + "\n";
    return out;
}

} // namespace codim

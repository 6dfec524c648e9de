#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "codim/digraph.hpp"

namespace codim {

// A vertex u outside R is a 1-vertex w.r.t. R if every member of R has an
// edge to u, a 2-vertex if no member has, and neither otherwise.
enum class VertexClass { One, Two, Neither };

// A vertex w resolves the distinct pair (u, v) if w equals one of them, or
// both distances from w are defined and differ. Undefined distances compare
// with nothing.
bool resolves(const DistanceTable& d, Vertex w, Vertex u, Vertex v);

// First (by index order) pair of distinct vertices outside r that no member
// of r resolves; nullopt when r is a resolving set.
std::optional<std::pair<Vertex, Vertex>>
first_unresolved_pair(const DistanceTable& d, std::span<const Vertex> r);

bool is_resolving_set(const DistanceTable& d, std::span<const Vertex> r);
bool is_resolving_set(const Digraph& g, std::span<const Vertex> r);

// R resolves the pairs inside U using distances measured in the full graph.
// Requires r to be a subset of u, and u a subset of the vertex set.
bool is_resolving_for(const Digraph& g, std::span<const Vertex> r,
                      std::span<const Vertex> u);

// Requires non-empty r with u outside it.
VertexClass classify_vertex(const Digraph& g, std::span<const Vertex> r, Vertex u);

// Requires u1 a 1-vertex and u2 a 2-vertex w.r.t. r, and v outside r. True iff
// adding v removes both statuses; a vertex added to r counts as removed.
bool is_double_remover(const Digraph& g, std::span<const Vertex> r,
                       Vertex u1, Vertex u2, Vertex v);

// Exact minimum resolving set by subset enumeration: increasing cardinality,
// lexicographic within a cardinality, first hit. A one-vertex graph has the
// empty set. Throws DomainError when vertex_count() > max_n.
std::vector<Vertex> min_resolving_set_bruteforce(const Digraph& g, int max_n = 20);

namespace detail {

// Enumeration core. `forced` is a set of vertices known to belong to every
// resolving set smaller than n-1; pass empty for the plain unpruned search.
std::vector<Vertex> min_resolving_search(const DistanceTable& d,
                                         std::vector<Vertex> forced);

std::vector<Vertex> vertices_without_incoming(const Digraph& g);

} // namespace detail

} // namespace codim

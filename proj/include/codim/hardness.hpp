#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "codim/digraph.hpp"

namespace codim {

// Ground set X (ordered element names) and an ordered family C of proper,
// non-empty subsets of X. Duplicate subsets are allowed.
struct HittingSetInstance {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> sets; // element indices, sorted, per subset

    int n() const { return static_cast<int>(elements.size()); }
    int m() const { return static_cast<int>(sets.size()); }
};

// First content line: element names. Every following line: one subset as
// element names. `#` comments allowed; an interior blank line is rejected as
// an empty subset. Throws ParseError on unknown elements, empty subsets and
// subsets equal to X.
HittingSetInstance parse_hitting_set(std::string_view text);

// Validates field invariants directly (for programmatically built instances).
void validate_instance(const HittingSetInstance& inst);

// Duplicates subsets cyclically from the front until m > n. Hitting sets are
// unchanged.
HittingSetInstance normalize_instance(HittingSetInstance inst);

enum class RoleKind : std::uint8_t { A, B, C, Elem, Set, SetPrime };

struct Role {
    RoleKind kind;
    int index = 0; // element or subset number, 1-based; 0 for A/B/C
};

std::string role_name(const Role& role);

// The reduction DAG: three source vertices a/b/c, one vertex per element,
// and a chain of subset layers C_j / Cp_j. Vertex order is topological.
struct ReductionResult {
    Digraph graph;
    std::vector<Role> roles; // by vertex
    int n = 0;
    int m = 0;

    Vertex vertex_a() const { return 0; }
    Vertex vertex_b() const { return 1; }
    Vertex vertex_c() const { return 2; }
    Vertex vertex_of_element(int i) const { return 3 + i; }          // 0-based i
    Vertex vertex_of_set(int j) const { return 3 + n + 2 * j; }      // 0-based j
    Vertex vertex_of_set_prime(int j) const { return 3 + n + 2 * j + 1; }
};

// Requires a normalized instance (m > n). Builds exactly the eight edge
// groups: element fan-out from a, the b anchor, the element chain, the c
// anchor, in-layer and layer-to-layer edges, element-to-set edges, and the
// membership-complement edges into the primed layer.
ReductionResult reduce(const HittingSetInstance& inst);

// {a, b, c} plus the element vertices of hit (0-based element indices).
// Throws std::invalid_argument unless hit intersects every subset.
std::vector<Vertex> hitting_to_resolving(const HittingSetInstance& inst,
                                         const std::vector<int>& hit);

// Replaces every set-layer vertex of r by the least-index member of its
// subset and returns the elements whose vertices remain. Throws
// std::invalid_argument unless r is a resolving set for reduce(inst).
std::vector<int> resolving_to_hitting(const HittingSetInstance& inst,
                                      const std::vector<Vertex>& r);

// Exact minimum hitting set: increasing cardinality, lexicographic within a
// cardinality. Throws DomainError when n > max_n.
std::vector<int> min_hitting_set_bruteforce(const HittingSetInstance& inst,
                                            int max_n = 20);

} // namespace codim

#include "codim/hardness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "codim/resolve.hpp"

namespace codim {

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::istringstream iss{std::string(line)};
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

HittingSetInstance parse_hitting_set(std::string_view text) {
    // split into comment-stripped lines, dropping trailing blank lines
    std::vector<std::pair<std::size_t, std::string>> lines; // (line number, payload)
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string payload(text.substr(start, end - start));
        if (auto pos = payload.find('#'); pos != std::string::npos)
            payload.resize(pos);
        lines.emplace_back(line_no, std::move(payload));
        if (end == text.size())
            break;
        start = end + 1;
    }
    auto is_blank = [](const std::string& s) {
        return split_tokens(s).empty();
    };
    while (!lines.empty() && is_blank(lines.back().second))
        lines.pop_back();
    std::size_t first = 0;
    while (first < lines.size() && is_blank(lines[first].second))
        ++first;
    if (first >= lines.size())
        throw ParseError("hitting-set file has no element line");

    HittingSetInstance inst;
    std::unordered_map<std::string, int> index;
    for (auto& name : split_tokens(lines[first].second)) {
        if (index.count(name))
            throw ParseError("duplicate element '" + name + "' at line " +
                             std::to_string(lines[first].first));
        index.emplace(name, inst.n());
        inst.elements.push_back(name);
    }
    for (std::size_t k = first + 1; k < lines.size(); ++k) {
        const auto& [no, payload] = lines[k];
        auto tokens = split_tokens(payload);
        if (tokens.empty())
            throw ParseError("empty subset at line " + std::to_string(no));
        std::vector<int> subset;
        for (const auto& tok : tokens) {
            auto it = index.find(tok);
            if (it == index.end())
                throw ParseError("unknown element '" + tok + "' at line " +
                                 std::to_string(no));
            subset.push_back(it->second);
        }
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        if (static_cast<int>(subset.size()) == inst.n())
            throw ParseError("subset at line " + std::to_string(no) +
                             " equals the ground set; C_j must be a proper subset");
        inst.sets.push_back(std::move(subset));
    }
    validate_instance(inst);
    return inst;
}

void validate_instance(const HittingSetInstance& inst) {
    if (inst.n() == 0)
        throw std::invalid_argument("hitting-set instance has no elements");
    std::unordered_set<std::string> names(inst.elements.begin(), inst.elements.end());
    if (static_cast<int>(names.size()) != inst.n())
        throw std::invalid_argument("element names must be distinct");
    for (const auto& subset : inst.sets) {
        if (subset.empty())
            throw std::invalid_argument("subsets must be non-empty");
        if (static_cast<int>(subset.size()) >= inst.n())
            throw std::invalid_argument("C_j must be a proper subset of X");
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (subset[i] < 0 || subset[i] >= inst.n())
                throw std::invalid_argument("subset references an unknown element");
            if (i + 1 < subset.size() && subset[i] >= subset[i + 1])
                throw std::invalid_argument("subsets must be sorted and duplicate-free");
        }
    }
}

HittingSetInstance normalize_instance(HittingSetInstance inst) {
    validate_instance(inst);
    if (inst.m() == 0)
        throw std::invalid_argument("cannot normalize an instance with no subsets");
    const int original = inst.m();
    int next = 0;
    while (inst.m() <= inst.n()) {
        inst.sets.push_back(inst.sets[next % original]);
        ++next;
    }
    return inst;
}

std::string role_name(const Role& role) {
    switch (role.kind) {
    case RoleKind::A: return "A";
    case RoleKind::B: return "B";
    case RoleKind::C: return "C";
    case RoleKind::Elem: return "elem:" + std::to_string(role.index);
    case RoleKind::Set: return "set:" + std::to_string(role.index);
    case RoleKind::SetPrime: return "setprime:" + std::to_string(role.index);
    }
    return "?";
}

ReductionResult reduce(const HittingSetInstance& inst) {
    validate_instance(inst);
    const int n = inst.n();
    const int m = inst.m();
    if (m <= n)
        throw std::invalid_argument("reduce requires a normalized instance (m > n)");

    ReductionResult out;
    out.n = n;
    out.m = m;
    Digraph& g = out.graph;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_vertex("c");
    out.roles.push_back({RoleKind::A});
    out.roles.push_back({RoleKind::B});
    out.roles.push_back({RoleKind::C});
    for (int i = 0; i < n; ++i) {
        g.add_vertex("x" + std::to_string(i + 1));
        out.roles.push_back({RoleKind::Elem, i + 1});
    }
    for (int j = 0; j < m; ++j) {
        g.add_vertex("C" + std::to_string(j + 1));
        g.add_vertex("Cp" + std::to_string(j + 1));
        out.roles.push_back({RoleKind::Set, j + 1});
        out.roles.push_back({RoleKind::SetPrime, j + 1});
    }

    std::vector<std::vector<char>> member(n, std::vector<char>(m, 0));
    for (int j = 0; j < m; ++j)
        for (int i : inst.sets[j])
            member[i][j] = 1;

    for (int i = 0; i < n; ++i) // (1) element fan-out
        g.add_edge(out.vertex_a(), out.vertex_of_element(i));
    g.add_edge(out.vertex_b(), out.vertex_of_element(0)); // (2) chain anchor
    for (int i = 0; i + 1 < n; ++i)                       // (3) element chain
        g.add_edge(out.vertex_of_element(i), out.vertex_of_element(i + 1));
    g.add_edge(out.vertex_c(), out.vertex_of_set(0)); // (4) layer anchor
    g.add_edge(out.vertex_c(), out.vertex_of_set_prime(0));
    for (int j = 0; j < m; ++j) // (5) in-layer edge
        g.add_edge(out.vertex_of_set(j), out.vertex_of_set_prime(j));
    for (int j = 0; j + 1 < m; ++j) { // (6) layer-to-layer edges
        for (Vertex from : {out.vertex_of_set(j), out.vertex_of_set_prime(j)}) {
            g.add_edge(from, out.vertex_of_set(j + 1));
            g.add_edge(from, out.vertex_of_set_prime(j + 1));
        }
    }
    for (int i = 0; i < n; ++i) // (7) every element reaches every set vertex
        for (int j = 0; j < m; ++j)
            g.add_edge(out.vertex_of_element(i), out.vertex_of_set(j));
    for (int i = 0; i < n; ++i) // (8) primed layer encodes non-membership
        for (int j = 0; j < m; ++j)
            if (!member[i][j])
                g.add_edge(out.vertex_of_element(i), out.vertex_of_set_prime(j));
    return out;
}

std::vector<Vertex> hitting_to_resolving(const HittingSetInstance& inst,
                                         const std::vector<int>& hit) {
    validate_instance(inst);
    std::vector<char> in_hit(inst.n(), 0);
    for (int i : hit) {
        if (i < 0 || i >= inst.n())
            throw std::invalid_argument("hitting_to_resolving: unknown element index");
        in_hit[i] = 1;
    }
    for (int j = 0; j < inst.m(); ++j) {
        bool covered = false;
        for (int i : inst.sets[j])
            if (in_hit[i]) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::invalid_argument(
                "hitting_to_resolving: X' does not hit subset C" + std::to_string(j + 1));
    }
    ReductionResult red = reduce(inst);
    std::vector<Vertex> r{red.vertex_a(), red.vertex_b(), red.vertex_c()};
    for (int i = 0; i < inst.n(); ++i)
        if (in_hit[i])
            r.push_back(red.vertex_of_element(i));
    return r;
}

std::vector<int> resolving_to_hitting(const HittingSetInstance& inst,
                                      const std::vector<Vertex>& r) {
    ReductionResult red = reduce(inst);
    if (!is_resolving_set(red.graph, r))
        throw std::invalid_argument(
            "resolving_to_hitting: R is not a resolving set for the reduction");
    std::vector<char> chosen(inst.n(), 0);
    for (Vertex v : r) {
        if (v < 0 || v >= red.graph.vertex_count())
            throw std::invalid_argument("resolving_to_hitting: unknown vertex");
        const Role& role = red.roles[v];
        if (role.kind == RoleKind::Elem) {
            chosen[role.index - 1] = 1;
        } else if (role.kind == RoleKind::Set || role.kind == RoleKind::SetPrime) {
            chosen[inst.sets[role.index - 1].front()] = 1; // least-index member
        }
    }
    std::vector<int> out;
    for (int i = 0; i < inst.n(); ++i)
        if (chosen[i])
            out.push_back(i);
    return out;
}

std::vector<int> min_hitting_set_bruteforce(const HittingSetInstance& inst,
                                            int max_n) {
    validate_instance(inst);
    const int n = inst.n();
    if (n > max_n)
        throw DomainError("hitting-set brute force refused: " + std::to_string(n) +
                          " elements, guard is " + std::to_string(max_n));
    std::vector<std::uint32_t> masks;
    for (const auto& subset : inst.sets) {
        std::uint32_t mask = 0;
        for (int i : subset)
            mask |= std::uint32_t{1} << i;
        masks.push_back(mask);
    }
    for (int k = 0; k <= n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            std::uint32_t pick = 0;
            for (int i : idx)
                pick |= std::uint32_t{1} << i;
            bool hits = true;
            for (std::uint32_t mask : masks)
                if (!(mask & pick)) {
                    hits = false;
                    break;
                }
            if (hits)
                return idx;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("min_hitting_set_bruteforce: X itself must hit every subset");
}

} // namespace codim

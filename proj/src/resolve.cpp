#include "codim/resolve.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace codim {

bool resolves(const DistanceTable& d, Vertex w, Vertex u, Vertex v) {
    if (u == v)
        throw std::invalid_argument("resolves: u and v must be distinct");
    if (w == u || w == v)
        return true;
    const auto& du = d.at(w, u);
    const auto& dv = d.at(w, v);
    return du.has_value() && dv.has_value() && *du != *dv;
}

std::optional<std::pair<Vertex, Vertex>>
first_unresolved_pair(const DistanceTable& d, std::span<const Vertex> r) {
    const int n = d.size();
    std::vector<char> in_r(n, 0);
    for (Vertex w : r)
        in_r.at(w) = 1;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (in_r[u] || in_r[v])
                continue; // membership resolves the pair
            bool ok = false;
            for (Vertex w : r) {
                const auto& du = d.at(w, u);
                const auto& dv = d.at(w, v);
                if (du && dv && *du != *dv) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

bool is_resolving_set(const DistanceTable& d, std::span<const Vertex> r) {
    return !first_unresolved_pair(d, r).has_value();
}

bool is_resolving_set(const Digraph& g, std::span<const Vertex> r) {
    return is_resolving_set(distance_table(g), r);
}

bool is_resolving_for(const Digraph& g, std::span<const Vertex> r,
                      std::span<const Vertex> u) {
    const int n = g.vertex_count();
    std::vector<char> in_u(n, 0);
    for (Vertex x : u) {
        if (x < 0 || x >= n)
            throw std::invalid_argument("is_resolving_for: U contains an unknown vertex");
        in_u[x] = 1;
    }
    std::vector<char> in_r(n, 0);
    for (Vertex w : r) {
        if (w < 0 || w >= n || !in_u[w])
            throw std::invalid_argument("is_resolving_for: R must be a subset of U");
        in_r[w] = 1;
    }
    const DistanceTable d = distance_table(g);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            Vertex a = u[i], b = u[j];
            if (a == b)
                continue;
            if (in_r[a] || in_r[b])
                continue;
            bool ok = false;
            for (Vertex w : r) {
                if (resolves(d, w, a, b)) {
                    ok = true;
                    break;
                }
            }
            if (!ok)
                return false;
        }
    }
    return true;
}

VertexClass classify_vertex(const Digraph& g, std::span<const Vertex> r, Vertex u) {
    if (r.empty())
        throw std::invalid_argument("classify_vertex: R must be non-empty");
    for (Vertex w : r)
        if (w == u)
            throw std::invalid_argument("classify_vertex: u must not be in R");
    bool all = true, none = true;
    for (Vertex w : r) {
        if (g.has_edge(w, u))
            none = false;
        else
            all = false;
    }
    if (all)
        return VertexClass::One;
    if (none)
        return VertexClass::Two;
    return VertexClass::Neither;
}

bool is_double_remover(const Digraph& g, std::span<const Vertex> r,
                       Vertex u1, Vertex u2, Vertex v) {
    if (classify_vertex(g, r, u1) != VertexClass::One)
        throw std::invalid_argument("is_double_remover: u1 is not a 1-vertex w.r.t. R");
    if (classify_vertex(g, r, u2) != VertexClass::Two)
        throw std::invalid_argument("is_double_remover: u2 is not a 2-vertex w.r.t. R");
    for (Vertex w : r)
        if (w == v)
            throw std::invalid_argument("is_double_remover: v must not be in R");

    std::vector<Vertex> extended(r.begin(), r.end());
    extended.push_back(v);
    // a status vertex absorbed into the set no longer carries a status
    bool still_one = (v != u1) && classify_vertex(g, extended, u1) == VertexClass::One;
    bool still_two = (v != u2) && classify_vertex(g, extended, u2) == VertexClass::Two;
    return !still_one && !still_two;
}

namespace detail {

std::vector<Vertex> vertices_without_incoming(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<char> has_in(n, 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.out_neighbors(u))
            has_in[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!has_in[v])
            out.push_back(v);
    return out;
}

std::vector<Vertex> min_resolving_search(const DistanceTable& d,
                                         std::vector<Vertex> forced) {
    const int n = d.size();
    const int pairs = n * (n - 1) / 2;
    const int words = (pairs + 63) / 64;
    auto pair_bit = [n](int u, int v) {
        return u * (2 * n - u - 1) / 2 + (v - u - 1);
    };

    // resolved_by[w]: bit per unordered pair, set when w resolves it
    // (by membership or by two defined, distinct distances)
    std::vector<std::vector<std::uint64_t>> resolved_by(
        n, std::vector<std::uint64_t>(words, 0));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int bit = pair_bit(u, v);
            for (int w = 0; w < n; ++w) {
                bool ok = (w == u || w == v);
                if (!ok) {
                    const auto& du = d.at(w, u);
                    const auto& dv = d.at(w, v);
                    ok = du && dv && *du != *dv;
                }
                if (ok)
                    resolved_by[w][bit / 64] |= std::uint64_t{1} << (bit % 64);
            }
        }
    }

    std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
    if (pairs % 64)
        full[words - 1] = (std::uint64_t{1} << (pairs % 64)) - 1;
    if (words == 0)
        full.clear();
    auto covers = [&](const std::vector<std::uint64_t>& acc) {
        for (int i = 0; i < words; ++i)
            if (acc[i] != full[i])
                return false;
        return true;
    };

    std::sort(forced.begin(), forced.end());
    std::vector<std::uint64_t> base(words, 0);
    std::vector<char> is_forced(n, 0);
    for (Vertex f : forced) {
        is_forced[f] = 1;
        for (int i = 0; i < words; ++i)
            base[i] |= resolved_by[f][i];
    }
    if (covers(base))
        return forced;

    std::vector<Vertex> free;
    for (Vertex v = 0; v < n; ++v)
        if (!is_forced[v])
            free.push_back(v);
    const int m = static_cast<int>(free.size());

    std::vector<std::uint64_t> acc(words);
    for (int k = 1; k <= m; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            acc = base;
            for (int i = 0; i < k; ++i) {
                const auto& mask = resolved_by[free[idx[i]]];
                for (int w = 0; w < words; ++w)
                    acc[w] |= mask[w];
            }
            if (covers(acc)) {
                std::vector<Vertex> result = forced;
                for (int i = 0; i < k; ++i)
                    result.push_back(free[idx[i]]);
                std::sort(result.begin(), result.end());
                return result;
            }
            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("min_resolving_search: the full vertex set must resolve");
}

} // namespace detail

std::vector<Vertex> min_resolving_set_bruteforce(const Digraph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw DomainError("brute force refused: graph has " + std::to_string(n) +
                          " vertices, guard is " + std::to_string(max_n) +
                          " (raise max_n to override)");
    if (n <= 1)
        return {};
    const DistanceTable d = distance_table(g);
    const std::vector<Vertex> sources = detail::vertices_without_incoming(g);
    const bool prune = sources.size() >= 2 || n > 12;
    if (!prune)
        return detail::min_resolving_search(d, {});

    std::vector<Vertex> best = detail::min_resolving_search(d, sources);
    // A resolving set that misses a vertex v with no incoming edges must
    // contain every other vertex, so V \ {v} is the only shape outside the
    // forced search. Lex-least of those drops the largest such v.
    if (!sources.empty() && static_cast<int>(best.size()) >= n - 1) {
        Vertex drop = sources.back();
        std::vector<Vertex> alt;
        alt.reserve(n - 1);
        for (Vertex v = 0; v < n; ++v)
            if (v != drop)
                alt.push_back(v);
        if (alt.size() < best.size() || (alt.size() == best.size() && alt < best))
            best = alt;
    }
    return best;
}

} // namespace codim

#pragma once

// Brute-force reference implementations used only by the tests. None of them
// shares code paths with the library search routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg::oracle {

inline int code(const SignedGraph& g, Vertex a, Vertex b) {
    for (const auto& e : g.edges())
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return e.sign == Sign::Positive ? 1 : 2;
    return 0;
}

/// Plain odometer over all |H|^n maps, checking every edge at the leaves.
/// `pins[v]` = -1 for free vertices.
template <typename F>
void for_each_map(int n, int t, const std::vector<int>& pins, F&& f) {
    std::vector<int> map(n, 0);
    for (int v = 0; v < n; ++v)
        if (pins[v] >= 0) map[v] = pins[v];
    while (true) {
        f(map);
        int v = 0;
        for (; v < n; ++v) {
            if (pins[v] >= 0) continue;
            if (++map[v] < t) break;
            map[v] = 0;
        }
        if (v == n) return;
    }
}

inline bool is_hom(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& map) {
    for (const auto& e : g.edges()) {
        int c = code(h, map[e.u], map[e.v]);
        if (map[e.u] == map[e.v] || c != (e.sign == Sign::Positive ? 1 : 2)) return false;
    }
    return true;
}

inline std::uint64_t count_homs(const SignedGraph& g, const SignedGraph& h, std::vector<int> pins = {}) {
    if (pins.empty()) pins.assign(g.vertex_count(), -1);
    for (int p : pins)
        if (p >= h.vertex_count()) return 0;
    std::uint64_t count = 0;
    for_each_map(g.vertex_count(), h.vertex_count(), pins, [&](const std::vector<int>& m) { count += is_hom(g, h, m); });
    return count;
}

/// Depth-first in index order; no ordering heuristics, no propagation.
inline bool hom_exists(const SignedGraph& g, const SignedGraph& h, std::vector<int> pins = {}) {
    const int n = g.vertex_count();
    if (pins.empty()) pins.assign(n, -1);
    std::vector<int> map(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int a = 0; a < h.vertex_count(); ++a) {
            if (pins[v] >= 0 && pins[v] != a) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                int c = code(g, u, v);
                if (c == 0) continue;
                ok = map[u] != a && code(h, map[u], a) == c;
            }
            if (!ok) continue;
            map[v] = a;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Both colouring conditions checked straight from their definitions.
inline bool valid_colouring(const SignedGraph& g, const std::vector<int>& c) {
    for (const auto& e : g.edges())
        if (c[e.u] == c[e.v]) return false;
    for (const auto& e : g.edges())
        for (const auto& f : g.edges()) {
            bool same_pair = (c[e.u] == c[f.u] && c[e.v] == c[f.v]) || (c[e.u] == c[f.v] && c[e.v] == c[f.u]);
            if (same_pair && e.sign != f.sign) return false;
        }
    return true;
}

inline int chromatic_number(const SignedGraph& g) {
    const int n = g.vertex_count();
    for (int k = 1;; ++k) {
        bool found = false;
        for_each_map(n, k, std::vector<int>(n, -1), [&](const std::vector<int>& m) {
            if (!found && valid_colouring(g, m)) found = true;
        });
        if (found) return k;
    }
}

/// Backtracking isomorphism test with degree pruning.
inline bool isomorphic(const SignedGraph& a, const SignedGraph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || a.degree(v) != b.degree(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = code(a, u, v) == code(b, map[u], w);
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

inline SignedGraph random_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution edge(density), neg(0.5);
    std::vector<SignedEdge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (edge(rng)) edges.push_back({u, v, neg(rng) ? Sign::Negative : Sign::Positive});
    return SignedGraph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

/// Every labelled signed graph on n vertices, by base-3 code over the pairs.
template <typename F>
void for_each_signed_graph(int n, F&& f) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<SignedEdge> edges;
        std::uint64_t c = code;
        for (auto [u, v] : pairs) {
            int digit = static_cast<int>(c % 3);
            c /= 3;
            if (digit != 0) edges.push_back({u, v, digit == 1 ? Sign::Positive : Sign::Negative});
        }
        f(SignedGraph(n, edges));
    }
}

}  // namespace sg::oracle

#include "sg/signed_graph.hpp"

#include <algorithm>
#include <numeric>

namespace sg {

std::optional<Sign> sign_from_char(char c) noexcept {
    if (c == '+') return Sign::Positive;
    if (c == '-') return Sign::Negative;
    return std::nullopt;
}

SignedGraph::SignedGraph(int vertex_count) : SignedGraph(vertex_count, std::span<const SignedEdge>{}) {}

SignedGraph::SignedGraph(int vertex_count, std::span<const SignedEdge> edges) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(vertex_count) + " outside [0, 64]");
    pos_.assign(n_, 0);
    neg_.assign(n_, 0);
    edges_.reserve(edges.size());
    for (SignedEdge e : edges) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " has an endpoint outside [0, " + std::to_string(n_) + ")");
        if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (((pos_[e.u] | neg_[e.u]) >> e.v) & 1U)
            throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        auto& rows = e.sign == Sign::Positive ? pos_ : neg_;
        rows[e.u] |= std::uint64_t{1} << e.v;
        rows[e.v] |= std::uint64_t{1} << e.u;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
    std::uint64_t bit = std::uint64_t{1} << check(v);
    check(u);
    if (pos_[u] & bit) return Sign::Positive;
    if (neg_[u] & bit) return Sign::Negative;
    return std::nullopt;
}

const char* to_string(VertexClass c) noexcept {
    switch (c) {
        case VertexClass::AllPositive: return "AllPositive";
        case VertexClass::AllNegative: return "AllNegative";
        case VertexClass::Mixed: return "Mixed";
        case VertexClass::Isolated: return "Isolated";
    }
    return "?";
}

SignedGraph flip_signs(const SignedGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges) e.sign = flip(e.sign);
    return SignedGraph(g.vertex_count(), edges);
}

VertexClass classify_vertex(const SignedGraph& g, Vertex v) {
    std::uint64_t p = g.positive_neighbours(v);
    std::uint64_t m = g.negative_neighbours(v);
    if (p == 0 && m == 0) return VertexClass::Isolated;
    if (m == 0) return VertexClass::AllPositive;
    if (p == 0) return VertexClass::AllNegative;
    return VertexClass::Mixed;
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw GraphError("relabel: permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (Vertex p : perm) {
        if (p < 0 || p >= n || seen[p]) throw GraphError("relabel: not a permutation");
        seen[p] = true;
    }
    std::vector<SignedEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
    return SignedGraph(n, edges);
}

SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep) {
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count() || index[keep[i]] != -1)
            throw GraphError("induced_subgraph: bad vertex list");
        index[keep[i]] = static_cast<int>(i);
    }
    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v], e.sign});
    return SignedGraph(static_cast<int>(keep.size()), edges);
}

std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> out;
    std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (unseen != 0) {
        Vertex root = std::countr_zero(unseen);
        std::uint64_t comp = std::uint64_t{1} << root;
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for_each_bit(frontier, [&](Vertex v) { next |= g.neighbours(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        unseen &= ~comp;
        std::vector<Vertex> vs;
        for_each_bit(comp, [&](Vertex v) { vs.push_back(v); });
        out.push_back(std::move(vs));
    }
    return out;
}

bool is_connected(const SignedGraph& g) { return connected_components(g).size() <= 1; }

int max_degree(const SignedGraph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_cubic(const SignedGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return g.vertex_count() > 0;
}

bool is_properly_subcubic(const SignedGraph& g) {
    if (max_degree(g) > 3) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 2) return true;
    return false;
}

}  // namespace sg

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sg {

using Vertex = int;

/// Neighbourhood rows are 64-bit masks, so graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

enum class Sign : std::uint8_t { Positive, Negative };

constexpr Sign flip(Sign s) noexcept {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

std::optional<Sign> sign_from_char(char c) noexcept;

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SignedEdge {
    Vertex u = 0;
    Vertex v = 0;
    Sign sign = Sign::Positive;

    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// A simple graph with a sign on every edge.
///
/// Edges are normalised to u < v and kept sorted, so iteration order is
/// deterministic. Loops, repeated pairs and out-of-range endpoints are
/// rejected at construction; the value is immutable afterwards.
class SignedGraph {
  public:
    SignedGraph() = default;
    explicit SignedGraph(int vertex_count);
    SignedGraph(int vertex_count, std::span<const SignedEdge> edges);
    SignedGraph(int vertex_count, std::initializer_list<SignedEdge> edges)
        : SignedGraph(vertex_count, std::span<const SignedEdge>(edges.begin(), edges.size())) {}

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

    std::optional<Sign> sign(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return (neighbours(u) >> check(v)) & 1U; }
    int degree(Vertex v) const { return std::popcount(neighbours(v)); }

    std::uint64_t positive_neighbours(Vertex v) const { return pos_[check(v)]; }
    std::uint64_t negative_neighbours(Vertex v) const { return neg_[check(v)]; }
    std::uint64_t neighbours(Vertex v) const {
        check(v);
        return pos_[v] | neg_[v];
    }
    std::uint64_t neighbours(Vertex v, Sign s) const {
        return s == Sign::Positive ? positive_neighbours(v) : negative_neighbours(v);
    }

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

  private:
    Vertex check(Vertex v) const {
        if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
        return v;
    }

    int n_ = 0;
    std::vector<SignedEdge> edges_;
    std::vector<std::uint64_t> pos_;
    std::vector<std::uint64_t> neg_;
};

enum class VertexClass { AllPositive, AllNegative, Mixed, Isolated };

const char* to_string(VertexClass c) noexcept;

SignedGraph flip_signs(const SignedGraph& g);

VertexClass classify_vertex(const SignedGraph& g, Vertex v);

/// `perm[v]` is the new label of v; perm must be a permutation of 0..n-1.
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm);

/// Subgraph induced by `keep`; vertex keep[i] becomes i.
SignedGraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> keep);

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const SignedGraph& g);

bool is_connected(const SignedGraph& g);
int max_degree(const SignedGraph& g);
bool is_cubic(const SignedGraph& g);

/// Maximum degree at most three with some vertex of degree at most two.
bool is_properly_subcubic(const SignedGraph& g);

/// Iterates set bits of a mask in increasing order.
template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
    while (mask != 0) {
        f(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
}

}  // namespace sg

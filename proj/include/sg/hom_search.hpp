#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

inline constexpr Vertex kUnassigned = -1;

/// Candidate homomorphism: `map[v]` is the image of source vertex v, or kUnassigned.
using VertexMap = std::vector<Vertex>;

/// Required images for some source vertices.
class PinSet {
  public:
    PinSet() = default;
    PinSet(std::initializer_list<std::pair<Vertex, Vertex>> pins);

    /// Throws GraphError if `source` is already pinned.
    void pin(Vertex source, Vertex target);

    const std::vector<std::pair<Vertex, Vertex>>& pins() const noexcept { return pins_; }
    bool empty() const noexcept { return pins_.empty(); }

  private:
    std::vector<std::pair<Vertex, Vertex>> pins_;
};

/// True iff `map` sends every edge of `source` onto an edge of `target` of the same sign.
/// Throws GraphError if the map is not total or has an out-of-range image.
bool check_homomorphism(const SignedGraph& source, const SignedGraph& target, std::span<const Vertex> map);

/// Backtracking with forward checking over sign-aware bitset domains.
/// Variables: fewest remaining candidates first, ties to the lower index.
/// Values: ascending. Connected components are solved independently.
std::optional<VertexMap> find_homomorphism(const SignedGraph& source, const SignedGraph& target,
                                           const PinSet& pins = {});

std::uint64_t count_homomorphisms(const SignedGraph& source, const SignedGraph& target, const PinSet& pins = {});

/// Visits homomorphisms in search order until `visit` returns false.
/// Returns the number of maps visited.
std::uint64_t for_each_homomorphism(const SignedGraph& source, const SignedGraph& target, const PinSet& pins,
                                    const std::function<bool(std::span<const Vertex>)>& visit);

}  // namespace sg

#pragma once

#include <string>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

/// An induced, sign-exact occurrence of a pattern inside a host graph:
/// pattern vertex i is sent to host vertex `map[i]`.
struct Embedding {
    std::string pattern_id;
    std::vector<Vertex> map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class CopyMode {
    /// One embedding per image vertex set (the lexicographically least role assignment).
    ModuloAutomorphism,
    /// Every role assignment.
    AllRoleAssignments,
};

/// Every vertex triple spanning a triangle, as increasing triples.
std::vector<Embedding> find_triangles(const SignedGraph& g);

std::vector<Embedding> find_induced_copies(const SignedGraph& host, const SignedGraph& pattern,
                                           CopyMode mode = CopyMode::ModuloAutomorphism,
                                           const std::string& pattern_id = "pattern");

/// Re-checks the induced-copy invariant edge by edge.
bool is_induced_copy(const SignedGraph& host, const SignedGraph& pattern, const std::vector<Vertex>& map);

}  // namespace sg

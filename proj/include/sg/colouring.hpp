#pragma once

#include <optional>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

/// A labelling c : V -> {0..k-1}. Whether it is a valid colouring is a
/// separate question answered by validate_colouring.
struct Colouring {
    int k = 0;
    std::vector<int> labels;

    int colours_used() const;
    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Proper, and every unordered colour pair carries edges of a single sign.
bool validate_colouring(const SignedGraph& g, const Colouring& c);

/// The k-vertex signed graph that a valid colouring maps g onto.
/// Throws GraphError if the colouring is invalid.
SignedGraph implicit_target(const SignedGraph& g, const Colouring& c);

/// Exhaustive backtracking; new colours are introduced in ascending order.
std::optional<Colouring> find_k_colouring(const SignedGraph& g, int k);

struct ChromaticResult {
    int chi = 0;
    Colouring witness;
};

/// Least k admitting a colouring, searched upward from a greedy clique bound.
ChromaticResult chromatic(const SignedGraph& g);

int chromatic_number(const SignedGraph& g);

}  // namespace sg

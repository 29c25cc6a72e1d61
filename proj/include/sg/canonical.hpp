#pragma once

#include <string>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

/// Canonical labelling of a signed graph under sign-preserving isomorphism.
///
/// `form` is equal for two graphs iff they are isomorphic. `labelling[v]` is
/// the canonical label of v, and `automorphisms` holds the full automorphism
/// group as permutations (identity included).
struct CanonicalResult {
    std::string form;
    std::vector<Vertex> labelling;
    std::vector<std::vector<Vertex>> automorphisms;
};

/// Equitable refinement on (degree, sign profile), then individualisation
/// over the whole search tree. Sized for desk-scale graphs (n <= ~16).
CanonicalResult canonicalize(const SignedGraph& g);

std::string canonical_form(const SignedGraph& g);

/// Hex rendering of a canonical form, usable as a stable identifier.
std::string canonical_id(const SignedGraph& g);

}  // namespace sg

#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

/// One of the two five-vertex obstructions: K_4 with one edge subdivided.
/// Vertex i plays role x_{i+1}: x_1 is the subdivision vertex, x_2 and x_3
/// the branch vertices, x_4 and x_5 the ends of the undivided edge.
struct ObstructionPattern {
    std::string name;
    SignedGraph graph;
};

inline constexpr Vertex kRoleX1 = 0;
inline constexpr Vertex kRoleX2 = 1;
inline constexpr Vertex kRoleX3 = 2;
inline constexpr Vertex kRoleX4 = 3;
inline constexpr Vertex kRoleX5 = 4;

/// SP_9 plus a vertex z joined positively to `nplus` and negatively to `nminus`.
struct DaggerTarget {
    SignedGraph graph;
    Vertex z = 9;
    std::array<Vertex, 3> nplus{};
    std::array<Vertex, 3> nminus{};
    /// Extension-lemma cases (of 36) that hold for this choice.
    int lemma_cases_passed = 0;
};

/// SP_9 plus 0' and 1'. `role0`, `role1`, `role8` are the SP_9 vertices
/// playing the parts of 0, 1 and the excluded vertex 8 in the attachment recipe.
struct StarTarget {
    SignedGraph graph;
    Vertex zero_prime = 9;
    Vertex one_prime = 10;
    Vertex role0 = 0;
    Vertex role1 = 1;
    Vertex role8 = 8;
};

struct TargetCatalog {
    SignedGraph sp9;
    ObstructionPattern k4s_plus;
    ObstructionPattern k4s_minus;
    DaggerTarget sp9_dagger;
    StarTarget sp9_star;
};

/// 3x3 rook's graph labelling: i ~ j positively iff same row or column of the grid.
SignedGraph build_sp9();

struct BulletCheck {
    std::string description;
    int expected = 0;
    int edges_checked = 0;
    int edges_failing = 0;
    bool passed() const { return edges_checked > 0 && edges_failing == 0; }
};

struct AdjacencyReport {
    std::array<BulletCheck, 8> bullets;
    bool all_passed() const;
};

/// Common-neighbour sign-pattern counts on every edge of a complete 9-vertex signed graph.
/// Throws GraphError if the input is not complete on 9 vertices.
AdjacencyReport verify_sp9_adjacency(const SignedGraph& sp9);

/// Pattern counts (++, +-, -+, --) of the seven remaining vertices against edge uv.
std::array<int, 4> common_neighbour_pattern(const SignedGraph& g, Vertex u, Vertex v);

/// The fixed topology of the obstructions, vertex i in role x_{i+1}.
std::vector<std::pair<Vertex, Vertex>> subdivided_k4_edges();

struct ObstructionDerivation {
    ObstructionPattern k4s_plus;
    ObstructionPattern k4s_minus;
    /// Sign masks (bit i = edge i negative) over subdivided_k4_edges() that fail to map.
    std::vector<unsigned> failing_masks;
};

/// Searches all 128 signatures of the subdivided K_4 for those admitting no
/// homomorphism to sp9. Throws GraphError unless they form exactly one
/// positive-heavy and one negative-heavy isomorphism class.
ObstructionDerivation derive_k4s_obstructions(const SignedGraph& sp9);

DaggerTarget make_dagger(const SignedGraph& sp9, std::array<Vertex, 3> nplus, std::array<Vertex, 3> nminus);

/// Lexicographically least (nplus, nminus) among those with the most
/// extension-lemma cases holding. Never throws.
DaggerTarget select_sp9_dagger(const SignedGraph& sp9, const ObstructionPattern& plus,
                               const ObstructionPattern& minus);

/// As select_sp9_dagger, but throws GraphError unless all 36 cases hold.
///
/// With the formula-built SP_9 this always throws: the positive lemma needs
/// nplus to be a row or column of the grid, the negative lemma needs nminus
/// to be a transversal, and every transversal meets every row and column.
DaggerTarget build_sp9_dagger(const SignedGraph& sp9, const ObstructionPattern& plus,
                              const ObstructionPattern& minus);

StarTarget make_star(const SignedGraph& sp9, Vertex role0, Vertex role1, Vertex role8);

/// First role choice (lexicographic over ordered triples) for which every
/// graph in `cubic_instances` maps to the result.
StarTarget build_sp9_star(const SignedGraph& sp9, std::span<const SignedGraph> cubic_instances);

/// Builds and verifies the whole catalog once; later calls return the cached value.
const TargetCatalog& default_catalog();

/// `.sg` comment lines naming the distinguished vertices of a catalog entry.
std::vector<std::string> describe_target(const TargetCatalog& catalog, const std::string& which);
SignedGraph catalog_graph(const TargetCatalog& catalog, const std::string& which);

}  // namespace sg

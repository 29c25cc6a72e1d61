#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sg/colouring.hpp"
#include "sg/hom_search.hpp"
#include "sg/patterns.hpp"
#include "sg/signed_graph.hpp"
#include "sg/targets.hpp"

namespace sg {

// ---- extension lemmas -------------------------------------------------------

/// Obstruction plus a pendant vertex v (index 5) joined to x_1 by an edge of sign `edge_sign`.
SignedGraph extension_gadget(const ObstructionPattern& pattern, Sign edge_sign);

inline constexpr Vertex kGadgetPendant = 5;

struct ExtensionCase {
    std::string pattern;
    Vertex pendant_image = 0;
    Sign edge_sign = Sign::Positive;
    bool passed = false;
    VertexMap witness;
};

struct ExtensionReport {
    std::vector<ExtensionCase> cases;
    bool all_passed() const;
    bool all_failed() const;
    int passed_count() const;
};

/// For each pendant image in 0..8 and each sign of the pendant edge, search for
/// a gadget homomorphism into `target` with v pinned there and x_5 pinned to `x5_image`.
ExtensionReport extension_cases(const SignedGraph& target, Vertex x5_image, const ObstructionPattern& pattern);

/// All 2 x 9 x 2 pinned cases into SP_9^dagger with x_5 sent to z.
ExtensionReport verify_extension_lemmas(const DaggerTarget& dagger, const ObstructionPattern& plus,
                                        const ObstructionPattern& minus);
ExtensionReport verify_extension_lemmas(const TargetCatalog& catalog);

// ---- ten-colouring ----------------------------------------------------------

enum class Branch { Copies, UnbalancedVertex, Triangle, CrossEdge, Direct };

const char* to_string(Branch b) noexcept;

struct TraceStage {
    std::string label;
    VertexMap witness;
};

/// How a ten-colouring was produced.
///
/// `proof_gaps` lists steps of the case analysis that did not go through on
/// this instance (another route was then taken). `falsifications` lists
/// searches that failed although the subcubic mapping lemma's hypotheses were
/// verified to hold; a correct run has none.
struct BranchTrace {
    Branch branch = Branch::Direct;
    bool flipped = false;
    bool fallback = false;
    std::vector<std::string> surgery;
    std::vector<TraceStage> stages;
    std::vector<std::string> proof_gaps;
    std::vector<std::string> falsifications;

    std::string branch_name() const;
    std::string to_json() const;
};

struct TenColouringResult {
    Colouring colouring;
    BranchTrace trace;
};

class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// No route produced a colouring with at most ten colours.
class InternalFalsification : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Hypotheses of the subcubic mapping lemma: maximum degree at most three,
/// every component has a vertex of degree at most two, and no induced copy
/// of either obstruction.
bool subcubic_lemma_applies(const SignedGraph& g, const TargetCatalog& catalog);

/// All induced copies of both obstructions (pattern ids "k4s+" and "k4s-").
std::vector<Embedding> obstruction_copies(const SignedGraph& g, const TargetCatalog& catalog);

/// Direct search: SP_9, then SP_9^dagger, then exact 10-colouring.
std::optional<Colouring> direct_colouring(const SignedGraph& g, const TargetCatalog& catalog, BranchTrace& trace);

/// Map the copy-free remainder into SP_9, then extend into each copy with x_5 sent to z.
/// Falls back to direct search when copies overlap.
std::optional<Colouring> branch_copies(const SignedGraph& g, const std::vector<Embedding>& copies,
                                       const TargetCatalog& catalog, BranchTrace& trace);

/// G - v into SP_9, v takes colour 9.
std::optional<Colouring> branch_unbalanced_vertex(const SignedGraph& g, Vertex v, const TargetCatalog& catalog,
                                                  BranchTrace& trace);

/// `triangle.map = {u, v, w}` with uv negative.
std::optional<Colouring> branch_triangle(const SignedGraph& g, const Embedding& triangle,
                                         const TargetCatalog& catalog, BranchTrace& trace);

/// Cross edge uv with u having two positive edges, v two negative edges, uv negative.
std::optional<Colouring> branch_cross_edge(const SignedGraph& g, Vertex u, Vertex v, const TargetCatalog& catalog,
                                           BranchTrace& trace);

/// Requires g connected and 3-regular (PreconditionError otherwise). The
/// result always validates with k = 10.
TenColouringResult ten_colouring(const SignedGraph& g, const TargetCatalog& catalog = default_catalog());

}  // namespace sg

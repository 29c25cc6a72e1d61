#include "sg/bound10.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sg {

namespace {

constexpr int kTen = 10;
constexpr int kFreshColour = 9;

std::string edge_str(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

}  // namespace

SignedGraph extension_gadget(const ObstructionPattern& pattern, Sign edge_sign) {
    std::vector<SignedEdge> edges = pattern.graph.edges();
    edges.push_back({kRoleX1, kGadgetPendant, edge_sign});
    return SignedGraph(6, edges);
}

bool ExtensionReport::all_passed() const {
    return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

bool ExtensionReport::all_failed() const {
    return std::none_of(cases.begin(), cases.end(), [](const auto& c) { return c.passed; });
}

int ExtensionReport::passed_count() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return c.passed; }));
}

ExtensionReport extension_cases(const SignedGraph& target, Vertex x5_image, const ObstructionPattern& pattern) {
    ExtensionReport report;
    for (Vertex i = 0; i < 9; ++i) {
        for (Sign s : {Sign::Positive, Sign::Negative}) {
            SignedGraph gadget = extension_gadget(pattern, s);
            auto phi = find_homomorphism(gadget, target, PinSet{{kGadgetPendant, i}, {kRoleX5, x5_image}});
            report.cases.push_back({pattern.name, i, s, phi.has_value(), phi.value_or(VertexMap{})});
        }
    }
    return report;
}

ExtensionReport verify_extension_lemmas(const DaggerTarget& dagger, const ObstructionPattern& plus,
                                        const ObstructionPattern& minus) {
    ExtensionReport report = extension_cases(dagger.graph, dagger.z, plus);
    ExtensionReport neg = extension_cases(dagger.graph, dagger.z, minus);
    report.cases.insert(report.cases.end(), neg.cases.begin(), neg.cases.end());
    return report;
}

ExtensionReport verify_extension_lemmas(const TargetCatalog& catalog) {
    return verify_extension_lemmas(catalog.sp9_dagger, catalog.k4s_plus, catalog.k4s_minus);
}

const char* to_string(Branch b) noexcept {
    switch (b) {
        case Branch::Copies: return "Copies";
        case Branch::UnbalancedVertex: return "UnbalancedVertex";
        case Branch::Triangle: return "Triangle";
        case Branch::CrossEdge: return "CrossEdge";
        case Branch::Direct: return "Direct";
    }
    return "?";
}

std::string BranchTrace::branch_name() const {
    return flipped ? std::string("Flipped+") + to_string(branch) : std::string(to_string(branch));
}

std::string BranchTrace::to_json() const {
    nlohmann::json j;
    j["branch"] = branch_name();
    j["fallback"] = fallback;
    j["surgery"] = surgery;
    j["stages"] = nlohmann::json::array();
    for (const auto& s : stages) j["stages"].push_back({{"label", s.label}, {"witness", s.witness}});
    j["proof_gaps"] = proof_gaps;
    j["falsifications"] = falsifications;
    return j.dump();
}

std::vector<Embedding> obstruction_copies(const SignedGraph& g, const TargetCatalog& catalog) {
    auto copies = find_induced_copies(g, catalog.k4s_plus.graph, CopyMode::ModuloAutomorphism, "k4s+");
    auto minus = find_induced_copies(g, catalog.k4s_minus.graph, CopyMode::ModuloAutomorphism, "k4s-");
    copies.insert(copies.end(), minus.begin(), minus.end());
    return copies;
}

bool subcubic_lemma_applies(const SignedGraph& g, const TargetCatalog& catalog) {
    if (max_degree(g) > 3) return false;
    for (const auto& component : connected_components(g)) {
        bool low = std::any_of(component.begin(), component.end(), [&](Vertex v) { return g.degree(v) <= 2; });
        if (!low) return false;
    }
    return obstruction_copies(g, catalog).empty();
}

namespace {

// Records a failed SP_9 search: a falsification if the lemma promised success, else a proof gap.
void record_sp9_failure(const SignedGraph& searched, const std::string& what, const TargetCatalog& catalog,
                        BranchTrace& trace) {
    if (subcubic_lemma_applies(searched, catalog))
        trace.falsifications.push_back(what + ": no map into SP_9 although the subcubic lemma applies");
    else
        trace.proof_gaps.push_back(what + ": no map into SP_9 and the subcubic lemma does not apply");
}

std::optional<VertexMap> map_into_sp9(const SignedGraph& g, const std::string& what, const TargetCatalog& catalog,
                                      BranchTrace& trace) {
    auto phi = find_homomorphism(g, catalog.sp9);
    if (phi)
        trace.stages.push_back({what + " -> SP_9", *phi});
    else
        record_sp9_failure(g, what, catalog, trace);
    return phi;
}

// The neighbour of x_1 outside the copy, or -1.
Vertex attachment(const SignedGraph& g, const Embedding& copy) {
    Vertex attach = -1;
    for_each_bit(g.neighbours(copy.map[kRoleX1]), [&](Vertex w) {
        if (std::find(copy.map.begin(), copy.map.end(), w) == copy.map.end()) attach = w;
    });
    return attach;
}

}  // namespace

std::optional<Colouring> direct_colouring(const SignedGraph& g, const TargetCatalog& catalog, BranchTrace& trace) {
    trace.fallback = true;
    if (auto phi = find_homomorphism(g, catalog.sp9)) {
        trace.stages.push_back({"G -> SP_9 (direct)", *phi});
        return Colouring{kTen, *phi};
    }
    if (auto phi = find_homomorphism(g, catalog.sp9_dagger.graph)) {
        trace.stages.push_back({"G -> SP_9 dagger (direct)", *phi});
        return Colouring{kTen, *phi};
    }
    if (auto c = find_k_colouring(g, kTen)) {
        trace.stages.push_back({"exact 10-colouring (direct)", c->labels});
        return Colouring{kTen, c->labels};
    }
    return std::nullopt;
}

std::optional<Colouring> branch_copies(const SignedGraph& g, const std::vector<Embedding>& copies,
                                       const TargetCatalog& catalog, BranchTrace& trace) {
    if (copies.empty()) throw PreconditionError("branch_copies needs at least one obstruction copy");
    const int n = g.vertex_count();
    std::uint64_t covered = 0;
    for (const auto& copy : copies) {
        for (Vertex v : copy.map) {
            if ((covered >> v) & 1U) {
                trace.proof_gaps.push_back("obstruction copies overlap at vertex " + std::to_string(v));
                trace.surgery.push_back("direct search into SP_9 dagger");
                return direct_colouring(g, catalog, trace);
            }
            covered |= std::uint64_t{1} << v;
        }
    }

    std::vector<int> labels(n, -1);
    std::vector<Vertex> remainder;
    for (Vertex v = 0; v < n; ++v)
        if (!((covered >> v) & 1U)) remainder.push_back(v);
    trace.surgery.push_back("removed " + std::to_string(copies.size()) + " obstruction copies, " +
                            std::to_string(remainder.size()) + " vertices remain");
    if (!remainder.empty()) {
        auto phi = map_into_sp9(induced_subgraph(g, remainder), "G minus copies", catalog, trace);
        if (!phi) {
            trace.surgery.push_back("direct search into SP_9 dagger");
            return direct_colouring(g, catalog, trace);
        }
        for (std::size_t i = 0; i < remainder.size(); ++i) labels[remainder[i]] = (*phi)[i];
    }

    const auto& dagger = catalog.sp9_dagger;
    std::vector<bool> done(copies.size(), false);
    for (std::size_t finished = 0; finished < copies.size(); ++finished) {
        // Prefer a copy whose attachment vertex is already coloured.
        std::size_t pick = copies.size();
        for (std::size_t c = 0; c < copies.size() && pick == copies.size(); ++c) {
            if (done[c]) continue;
            Vertex attach = attachment(g, copies[c]);
            if (attach >= 0 && labels[attach] >= 0) pick = c;
        }
        bool seeded = false;
        if (pick == copies.size()) {
            pick = std::find(done.begin(), done.end(), false) - done.begin();
            seeded = true;
        }
        const Embedding& copy = copies[pick];
        const ObstructionPattern& pattern = copy.pattern_id == "k4s+" ? catalog.k4s_plus : catalog.k4s_minus;
        std::optional<VertexMap> phi;
        if (seeded) {
            phi = find_homomorphism(pattern.graph, dagger.graph, PinSet{{kRoleX5, dagger.z}});
            trace.surgery.push_back("copy " + std::to_string(pick) + " has no coloured attachment; placed with x5 -> z");
        } else {
            Vertex x1 = copy.map[kRoleX1];
            Vertex attach = attachment(g, copy);
            SignedGraph gadget = extension_gadget(pattern, *g.sign(x1, attach));
            phi = find_homomorphism(gadget, dagger.graph, PinSet{{kGadgetPendant, labels[attach]}, {kRoleX5, dagger.z}});
        }
        if (!phi) {
            trace.proof_gaps.push_back("extension into copy " + std::to_string(pick) + " failed");
            trace.surgery.push_back("direct search into SP_9 dagger");
            return direct_colouring(g, catalog, trace);
        }
        trace.stages.push_back({"copy " + std::to_string(pick) + " (" + copy.pattern_id + ") -> SP_9 dagger", *phi});
        for (Vertex r = 0; r < 5; ++r) labels[copy.map[r]] = (*phi)[r];
        done[pick] = true;
    }

    Colouring c{kTen, labels};
    if (!validate_colouring(g, c)) {
        trace.proof_gaps.push_back("assembled copy extension does not validate");
        return direct_colouring(g, catalog, trace);
    }
    return c;
}

std::optional<Colouring> branch_unbalanced_vertex(const SignedGraph& g, Vertex v, const TargetCatalog& catalog,
                                                  BranchTrace& trace) {
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    trace.surgery.push_back("removed unbalanced vertex " + std::to_string(v));
    auto phi = map_into_sp9(induced_subgraph(g, keep), "G - v", catalog, trace);
    if (!phi) return std::nullopt;
    std::vector<int> labels(g.vertex_count(), kFreshColour);
    for (std::size_t i = 0; i < keep.size(); ++i) labels[keep[i]] = (*phi)[i];
    Colouring c{kTen, labels};
    if (!validate_colouring(g, c)) {
        trace.proof_gaps.push_back("fresh colour on vertex " + std::to_string(v) + " does not validate");
        return std::nullopt;
    }
    return c;
}

std::optional<Colouring> branch_triangle(const SignedGraph& g, const Embedding& triangle,
                                         const TargetCatalog& catalog, BranchTrace& trace) {
    const Vertex u = triangle.map.at(0);
    const Vertex v = triangle.map.at(1);
    const Vertex w = triangle.map.at(2);
    if (g.sign(u, v) != Sign::Negative) throw GraphError("branch_triangle: uv must be a negative edge");
    const int n = g.vertex_count();
    const Vertex z = n;

    std::vector<SignedEdge> edges;
    for (const auto& e : g.edges())
        if (!(e.u == std::min(u, v) && e.v == std::max(u, v))) edges.push_back(e);
    edges.push_back({u, z, Sign::Positive});
    edges.push_back({v, z, Sign::Negative});
    SignedGraph g_prime(n + 1, edges);
    trace.surgery.push_back("triangle " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) +
                            ": removed " + edge_str(u, v) + ", added z=" + std::to_string(z) + " with +" +
                            edge_str(z, u) + " and -" + edge_str(z, v));
    auto phi = map_into_sp9(g_prime, "G'", catalog, trace);
    if (!phi) return std::nullopt;

    std::vector<int> base(phi->begin(), phi->begin() + n);
    auto attempt = [&](std::vector<int> labels, const std::string& step) -> std::optional<Colouring> {
        Colouring c{kTen, std::move(labels)};
        if (!validate_colouring(g, c)) return std::nullopt;
        trace.surgery.push_back(step);
        return c;
    };

    auto labels = base;
    labels[v] = kFreshColour;
    if (auto c = attempt(labels, "fresh colour on v")) return c;
    labels = base;
    labels[u] = kFreshColour;
    if (auto c = attempt(labels, "fresh colour on u")) return c;
    labels = base;
    labels[w] = kFreshColour;
    for (Vertex a = 0; a < 9; ++a) {
        for (Vertex b = 0; b < 9; ++b) {
            if (catalog.sp9.sign(a, b) != Sign::Negative) continue;
            labels[u] = a;
            labels[v] = b;
            if (auto c = attempt(labels, "fresh colour on w, u -> " + std::to_string(a) + ", v -> " + std::to_string(b)))
                return c;
        }
    }
    trace.proof_gaps.push_back("triangle " + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) +
                               ": no recolouring validates");
    return std::nullopt;
}

std::optional<Colouring> branch_cross_edge(const SignedGraph& g, Vertex u, Vertex v, const TargetCatalog& catalog,
                                           BranchTrace& trace) {
    if (g.sign(u, v) != Sign::Negative || std::popcount(g.positive_neighbours(u)) != 2 ||
        std::popcount(g.negative_neighbours(v)) != 2)
        throw GraphError("branch_cross_edge: expected u with two positive edges, v with two negative, uv negative");
    std::vector<Vertex> u_pos;
    for_each_bit(g.positive_neighbours(u), [&](Vertex x) { u_pos.push_back(x); });
    const Vertex u1 = u_pos[0];
    const Vertex u2 = u_pos[1];
    if (g.adjacent(u1, u2)) {
        trace.proof_gaps.push_back("positive neighbours " + edge_str(u1, u2) + " of u are adjacent");
        return std::nullopt;
    }

    std::vector<Vertex> keep;
    std::vector<int> index(g.vertex_count(), -1);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v) {
            index[x] = static_cast<int>(keep.size());
            keep.push_back(x);
        }
    SignedGraph rest = induced_subgraph(g, keep);
    std::vector<SignedEdge> edges = rest.edges();
    edges.push_back({index[u1], index[u2], Sign::Negative});
    SignedGraph g_star(rest.vertex_count(), edges);
    trace.surgery.push_back("cross edge " + edge_str(u, v) + ": removed " + std::to_string(u) + " and " +
                            std::to_string(v) + ", added negative edge " + edge_str(u1, u2));
    auto phi = map_into_sp9(g_star, "G*", catalog, trace);
    if (!phi) return std::nullopt;

    std::vector<int> labels(g.vertex_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) labels[keep[i]] = (*phi)[i];
    labels[v] = kFreshColour;
    // phi(u1) phi(u2) is a negative edge of SP_9: exactly two common positive neighbours.
    std::uint64_t candidates =
        catalog.sp9.positive_neighbours(labels[u1]) & catalog.sp9.positive_neighbours(labels[u2]);
    if (std::popcount(candidates) != 2)
        trace.proof_gaps.push_back("expected two common positive neighbours of the images of u1, u2");
    std::optional<Colouring> found;
    for_each_bit(candidates, [&](Vertex c) {
        if (found) return;
        labels[u] = c;
        Colouring col{kTen, labels};
        if (validate_colouring(g, col)) {
            trace.surgery.push_back("u -> " + std::to_string(c) + ", fresh colour on v");
            found = col;
        }
    });
    if (!found)
        trace.proof_gaps.push_back("cross edge " + edge_str(u, v) + ": neither candidate image of u validates");
    return found;
}

namespace {

std::optional<Colouring> try_triangles(const SignedGraph& g, const TargetCatalog& catalog, BranchTrace& trace) {
    for (const auto& t : find_triangles(g)) {
        const auto& m = t.map;
        // Each negative edge of the triangle, in both orientations, as (u, v) with w the third vertex.
        const std::array<std::array<Vertex, 3>, 6> roles = {{{m[0], m[1], m[2]},
                                                             {m[1], m[0], m[2]},
                                                             {m[0], m[2], m[1]},
                                                             {m[2], m[0], m[1]},
                                                             {m[1], m[2], m[0]},
                                                             {m[2], m[1], m[0]}}};
        for (const auto& r : roles) {
            if (g.sign(r[0], r[1]) != Sign::Negative) continue;
            if (auto c = branch_triangle(g, {"K3", {r[0], r[1], r[2]}}, catalog, trace)) return c;
        }
    }
    return std::nullopt;
}

std::optional<Colouring> try_cross_edges(const SignedGraph& g, const TargetCatalog& catalog, BranchTrace& trace) {
    for (const auto& e : g.edges()) {
        if (e.sign != Sign::Negative) continue;
        for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (std::popcount(g.positive_neighbours(u)) == 2 && std::popcount(g.negative_neighbours(v)) == 2)
                if (auto c = branch_cross_edge(g, u, v, catalog, trace)) return c;
        }
    }
    return std::nullopt;
}

bool has_negative_cross_edge(const SignedGraph& g) {
    for (const auto& e : g.edges()) {
        if (e.sign != Sign::Negative) continue;
        for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
            if (std::popcount(g.positive_neighbours(u)) == 2 && std::popcount(g.negative_neighbours(v)) == 2)
                return true;
    }
    return false;
}

bool has_negative_triangle_edge(const SignedGraph& g) {
    for (const auto& t : find_triangles(g)) {
        const auto& m = t.map;
        if (g.sign(m[0], m[1]) == Sign::Negative || g.sign(m[0], m[2]) == Sign::Negative ||
            g.sign(m[1], m[2]) == Sign::Negative)
            return true;
    }
    return false;
}

}  // namespace

TenColouringResult ten_colouring(const SignedGraph& g, const TargetCatalog& catalog) {
    if (!is_cubic(g)) throw PreconditionError("NotCubic: input graph is not 3-regular");
    if (!is_connected(g)) throw PreconditionError("NotConnected: input graph is not connected");

    BranchTrace trace;
    auto finish = [&](std::optional<Colouring> c) -> TenColouringResult {
        if (!c) {
            trace.surgery.push_back("direct search");
            c = direct_colouring(g, catalog, trace);
        }
        if (!c || !validate_colouring(g, *c))
            throw InternalFalsification("no colouring with at most ten colours was found");
        return {std::move(*c), std::move(trace)};
    };

    if (auto copies = obstruction_copies(g, catalog); !copies.empty()) {
        trace.branch = Branch::Copies;
        return finish(branch_copies(g, copies, catalog, trace));
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto cls = classify_vertex(g, v);
        if (cls == VertexClass::AllPositive || cls == VertexClass::AllNegative) {
            trace.branch = Branch::UnbalancedVertex;
            return finish(branch_unbalanced_vertex(g, v, catalog, trace));
        }
    }
    // Sign-flip reduction: a colouring of flip(G) is a colouring of G.
    const SignedGraph flipped = flip_signs(g);
    auto either_orientation = [&](auto applies, auto attempt) -> std::optional<Colouring> {
        if (applies(g)) {
            if (auto c = attempt(g, catalog, trace)) return c;
        }
        if (applies(flipped)) {
            trace.flipped = true;
            if (auto c = attempt(flipped, catalog, trace)) return c;
            trace.flipped = false;
        }
        return std::nullopt;
    };

    if (!find_triangles(g).empty()) {
        trace.branch = Branch::Triangle;
        return finish(either_orientation(has_negative_triangle_edge, try_triangles));
    }
    // Every vertex now has exactly two edges of one sign and one of the other.
    if (has_negative_cross_edge(g) || has_negative_cross_edge(flipped)) {
        trace.branch = Branch::CrossEdge;
        return finish(either_orientation(has_negative_cross_edge, try_cross_edges));
    }
    trace.branch = Branch::Direct;
    trace.proof_gaps.push_back("no edge joins a two-positive vertex to a two-negative vertex");
    return finish(std::nullopt);
}

}  // namespace sg

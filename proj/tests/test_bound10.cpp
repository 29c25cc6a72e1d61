#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sg/bound10.hpp"
#include "sg/colouring.hpp"
#include "sg/harness.hpp"
#include "sg/hom_search.hpp"
#include "sg/io.hpp"

using namespace sg;

namespace {

constexpr auto P = Sign::Positive;
constexpr auto N = Sign::Negative;

SignedGraph k4(Sign s) { return SignedGraph(4, {{0, 1, s}, {0, 2, s}, {0, 3, s}, {1, 2, s}, {1, 3, s}, {2, 3, s}}); }

// K_{3,3} with parts {0,1,2}, {3,4,5}; the matching i -- i+3 negative
SignedGraph k33_negative_matching() {
    std::vector<SignedEdge> edges;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) edges.push_back({a, b, b == a + 3 ? N : P});
    return SignedGraph(6, edges);
}

// triangles 0-1-2 and 3-4-5 with rungs i -- i+3; edges 0-1 and 3-4 take `odd_edge`
SignedGraph prism(Sign odd_edge, Sign last_rung = P) {
    return SignedGraph(6, {{0, 1, odd_edge}, {1, 2, P}, {0, 2, P}, {3, 4, odd_edge}, {4, 5, P}, {3, 5, P},
                           {0, 3, P}, {1, 4, P}, {2, 5, last_rung}});
}

// Möbius-Kantor graph: outer 8-cycle, spokes, inner star polygon {8/3}
Topology mobius_kantor() {
    Topology t;
    t.vertex_count = 16;
    for (int i = 0; i < 8; ++i) {
        t.edges.emplace_back(i, (i + 1) % 8);
        t.edges.emplace_back(i, 8 + i);
        t.edges.emplace_back(8 + i, 8 + (i + 3) % 8);
    }
    for (auto& [u, v] : t.edges)
        if (u > v) std::swap(u, v);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

void check_result(const SignedGraph& g, const TenColouringResult& r) {
    CHECK(validate_colouring(g, r.colouring));
    CHECK(r.colouring.k <= 10);
    CHECK(r.trace.falsifications.empty());
    CHECK(check_homomorphism(g, implicit_target(g, r.colouring), r.colouring.labels));
}

}  // namespace

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(ten_colouring(SignedGraph(3, {{0, 1, P}, {1, 2, P}})), PreconditionError);
    const auto positive = k4(P);
    const auto negative = k4(N);
    std::vector<SignedEdge> two = positive.edges();
    for (const auto& e : negative.edges()) two.push_back({e.u + 4, e.v + 4, e.sign});
    CHECK_THROWS_AS(ten_colouring(SignedGraph(8, two)), PreconditionError);

    BranchTrace trace;
    CHECK_THROWS_AS(branch_copies(k4(P), {}, default_catalog(), trace), PreconditionError);
}

TEST_CASE("unbalanced vertices") {
    for (auto g : {k4(P), k4(N)}) {
        auto r = ten_colouring(g);
        CHECK(r.trace.branch == Branch::UnbalancedVertex);
        check_result(g, r);
    }
    auto k33 = with_sign_mask(parse_graph6("EFz_"), 0);
    REQUIRE(is_cubic(k33));
    check_result(k33, ten_colouring(k33));

    auto matching = k33_negative_matching();
    auto r = ten_colouring(matching);
    check_result(matching, r);
    CHECK(chromatic_number(matching) <= r.colouring.colours_used());
}

TEST_CASE("triangle branch on the prism") {
    // One negative edge per triangle, positive rungs: vertices 2 and 5 are
    // all-positive, so dispatch stops earlier, but the branch itself applies.
    auto g = prism(N);
    auto r = ten_colouring(g);
    CHECK(r.trace.branch == Branch::UnbalancedVertex);
    check_result(g, r);
    BranchTrace trace;
    auto direct = branch_triangle(g, Embedding{"K3", {0, 1, 2}}, default_catalog(), trace);
    REQUIRE(direct);
    CHECK(validate_colouring(g, *direct));
    CHECK(trace.falsifications.empty());
    CHECK(oracle::chromatic_number(g) <= direct->colours_used());

    // Making the third rung negative leaves every vertex mixed.
    auto mixed = prism(N, N);
    auto rm = ten_colouring(mixed);
    CHECK(rm.trace.branch == Branch::Triangle);
    CHECK_FALSE(rm.trace.flipped);
    check_result(mixed, rm);
    CHECK(oracle::chromatic_number(mixed) <= rm.colouring.colours_used());

    auto flipped = flip_signs(mixed);
    auto rf = ten_colouring(flipped);
    CHECK(rf.trace.branch == Branch::Triangle);
    check_result(flipped, rf);

    auto positive = prism(P);
    check_result(positive, ten_colouring(positive));
}

TEST_CASE("cross edge branch on the Möbius-Kantor graph") {
    auto t = mobius_kantor();
    // Outer cycle and inner star alternate in sign, so every vertex is mixed;
    // spokes alternate too, which puts an edge between the two classes.
    std::string signs;
    for (const auto& [u, v] : t.edges) {
        int parity;
        if (v == u + 8)
            parity = u % 2;
        else if (u < 8)
            parity = v == u + 1 ? u % 2 : 1;  // the closing edge 0-7
        else
            parity = (v - 8 == (u - 8 + 3) % 8 ? u : v) % 2;
        signs += parity ? '-' : '+';
    }
    auto g = with_signs(t, signs);
    for (Vertex v = 0; v < 16; ++v) REQUIRE(classify_vertex(g, v) == VertexClass::Mixed);
    auto r = ten_colouring(g);
    CHECK(r.trace.branch == Branch::CrossEdge);
    check_result(g, r);
    CHECK(chromatic(g).chi <= r.colouring.colours_used());

    // more signatures meeting the same preconditions
    std::mt19937_64 rng(61);
    int hits = 0;
    for (int trial = 0; trial < 20000 && hits < 20; ++trial) {
        auto h = with_sign_mask(t, rng() & ((std::uint64_t{1} << 24) - 1));
        bool all_mixed = true;
        for (Vertex v = 0; v < 16; ++v) all_mixed = all_mixed && classify_vertex(h, v) == VertexClass::Mixed;
        if (!all_mixed) continue;
        auto rh = ten_colouring(h);
        check_result(h, rh);
        hits += rh.trace.branch == Branch::CrossEdge;
    }
    CHECK(hits == 20);
}

TEST_CASE("two obstruction copies joined at their subdivision vertices") {
    const auto& plus = default_catalog().k4s_plus.graph;
    std::vector<SignedEdge> edges = plus.edges();
    for (const auto& e : plus.edges()) edges.push_back({e.u + 5, e.v + 5, e.sign});
    edges.push_back({kRoleX1, kRoleX1 + 5, N});
    SignedGraph g(10, edges);
    REQUIRE(is_cubic(g));
    REQUIRE(obstruction_copies(g, default_catalog()).size() == 2);

    auto r = ten_colouring(g);
    CHECK(r.trace.branch == Branch::Copies);
    check_result(g, r);
    CHECK(r.trace.stages.size() >= 2);
}

TEST_CASE("extension lemmas and their controls") {
    const auto& cat = default_catalog();
    auto report = verify_extension_lemmas(cat);
    REQUIRE(report.cases.size() == 36);
    for (const auto& c : report.cases) {
        if (!c.passed) continue;
        auto gadget = extension_gadget(c.pattern == cat.k4s_plus.name ? cat.k4s_plus : cat.k4s_minus, c.edge_sign);
        CHECK(check_homomorphism(gadget, cat.sp9_dagger.graph, c.witness));
        CHECK(c.witness[kGadgetPendant] == c.pendant_image);
        CHECK(c.witness[kRoleX5] == cat.sp9_dagger.z);
    }

    auto swapped = make_dagger(cat.sp9, cat.sp9_dagger.nminus, cat.sp9_dagger.nplus);
    auto swapped_plus = extension_cases(swapped.graph, swapped.z, cat.k4s_plus);
    CHECK(swapped_plus.all_failed());

    auto plain = extension_cases(cat.sp9, 0, cat.k4s_plus);
    CHECK(plain.all_failed());
}

TEST_CASE("flip symmetry over the small sweep") {
    for (const auto& g : cubic_sweep_instances(8)) {
        auto r = ten_colouring(g);
        auto f = flip_signs(g);
        auto rf = ten_colouring(f);
        check_result(g, r);
        check_result(f, rf);
        CHECK(validate_colouring(f, r.colouring));
    }
}

TEST_CASE("trace JSON") {
    auto r = ten_colouring(prism(N, N));
    auto json = r.trace.to_json();
    CHECK(json.find("\"branch\"") != std::string::npos);
    CHECK(r.trace.branch_name() == "Triangle");
}

#include "sg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "sg/bound10.hpp"
#include "sg/canonical.hpp"
#include "sg/colouring.hpp"
#include "sg/hom_search.hpp"

namespace sg {

namespace {

SignedGraph positive_graph(const Topology& t) { return with_sign_mask(t, 0); }

// Degree-constrained backtracking. The lowest unsaturated vertex is filled
// with an increasing combination of later vertices; vertices still of degree
// zero are interchangeable, so only a prefix of them is ever used.
class CubicGenerator {
  public:
    explicit CubicGenerator(int n) : n_(n), adj_(n, 0), deg_(n, 0) {}

    template <typename F>
    void run(F&& emit) {
        fill(emit);
    }

  private:
    template <typename F>
    void fill(F& emit) {
        Vertex v = 0;
        while (v < n_ && deg_[v] == 3) ++v;
        if (v == n_) {
            emit(adj_);
            return;
        }
        std::vector<Vertex> candidates;
        for (Vertex w = v + 1; w < n_; ++w)
            if (deg_[w] < 3 && !((adj_[v] >> w) & 1U)) candidates.push_back(w);
        choose(v, 3 - deg_[v], candidates, 0, emit);
    }

    template <typename F>
    void choose(Vertex v, int need, const std::vector<Vertex>& candidates, std::size_t from, F& emit) {
        if (need == 0) {
            fill(emit);
            return;
        }
        bool tried_fresh = false;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            Vertex w = candidates[i];
            if (deg_[w] == 0) {
                // Only the first untouched vertex at this depth.
                if (tried_fresh) continue;
                tried_fresh = true;
            }
            link(v, w, +1);
            choose(v, need - 1, candidates, i + 1, emit);
            link(v, w, -1);
        }
    }

    void link(Vertex a, Vertex b, int delta) {
        adj_[a] ^= std::uint64_t{1} << b;
        adj_[b] ^= std::uint64_t{1} << a;
        deg_[a] += delta;
        deg_[b] += delta;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> deg_;
};


}  // namespace

std::vector<Topology> enumerate_cubic_graphs(int n) {
    if (n != 4 && n != 6 && n != 8 && n != 10)
        throw GraphError("enumerate_cubic_graphs: n must be 4, 6, 8 or 10");
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Topology>> found;
    CubicGenerator(n).run([&](const std::vector<std::uint64_t>& adj) {
        Topology t{n, {}};
        for (Vertex u = 0; u < n; ++u)
            for_each_bit(adj[u] & ~((std::uint64_t{2} << u) - 1), [&](Vertex v) { t.edges.emplace_back(u, v); });
        SignedGraph g = positive_graph(t);
        if (!is_connected(g)) return;
        CanonicalResult canon = canonicalize(g);
        if (!seen.insert(canon.form).second) return;
        found.emplace_back(canon.form, topology_of(relabel(g, canon.labelling)));
    });
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Topology> out;
    for (auto& [form, t] : found) out.push_back(std::move(t));
    return out;
}

std::vector<std::vector<Vertex>> topology_automorphisms(const Topology& t) {
    return canonicalize(positive_graph(t)).automorphisms;
}

std::vector<SignatureOrbit> enumerate_signatures(const Topology& t, bool reduce) {
    const std::size_t m = t.edges.size();
    if (m > 24) throw GraphError("enumerate_signatures: too many edges to enumerate");
    const std::uint64_t total = std::uint64_t{1} << m;
    std::vector<SignatureOrbit> out;
    if (!reduce) {
        out.reserve(total);
        for (std::uint64_t mask = 0; mask < total; ++mask) out.push_back({with_sign_mask(t, mask), mask, 1});
        return out;
    }
    // Edge permutations induced by the vertex automorphisms.
    std::vector<std::vector<int>> edge_perms;
    for (const auto& aut : topology_automorphisms(t)) {
        std::vector<int> perm(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = t.edges[i];
            std::pair<Vertex, Vertex> image{std::min(aut[a], aut[b]), std::max(aut[a], aut[b])};
            perm[i] = static_cast<int>(std::lower_bound(t.edges.begin(), t.edges.end(), image) - t.edges.begin());
        }
        edge_perms.push_back(std::move(perm));
    }
    std::vector<bool> visited(total, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (visited[mask]) continue;
        std::uint64_t size = 0;
        for (const auto& perm : edge_perms) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1U) image |= std::uint64_t{1} << perm[i];
            if (!visited[image]) {
                visited[image] = true;
                ++size;
            }
        }
        out.push_back({with_sign_mask(t, mask), mask, size});
    }
    return out;
}

std::vector<SignedGraph> cubic_sweep_instances(int max_n) {
    std::vector<SignedGraph> out;
    for (int n = 4; n <= max_n; n += 2)
        for (const auto& t : enumerate_cubic_graphs(n))
            for (auto& orbit : enumerate_signatures(t, true)) out.push_back(std::move(orbit.graph));
    return out;
}

namespace {

struct WorkItem {
    std::string topology;
    SignatureOrbit orbit;
};

InstanceReport process(const WorkItem& item, const SurveyOptions& options, const TargetCatalog& catalog) {
    const auto start = std::chrono::steady_clock::now();
    const SignedGraph& g = item.orbit.graph;
    InstanceReport r;
    r.id = canonical_id(g);
    r.n = g.vertex_count();
    r.topology = item.topology;
    r.signature = sign_string(g);
    r.orbit_size = item.orbit.orbit_size;
    try {
        auto result = ten_colouring(g, catalog);
        r.branch = result.trace.branch_name();
        r.fallback = result.trace.fallback;
        r.proof_gaps = static_cast<int>(result.trace.proof_gaps.size());
        r.falsifications = static_cast<int>(result.trace.falsifications.size());
        r.bound10_colours = result.colouring.colours_used();
        r.bound10_ok = validate_colouring(g, result.colouring) && result.colouring.k <= 10;
    } catch (const InternalFalsification& e) {
        r.branch = "none";
        r.falsifications += 1;
        r.error = e.what();
    }
    if (options.exact_chi) r.chi = chromatic_number(g);
    if (options.sp9star) r.sp9star_ok = find_homomorphism(g, catalog.sp9_star.graph).has_value();
    r.time_us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

SurveyResult run_survey(const SurveyOptions& options, const TargetCatalog& catalog) {
    if (options.max_n < 4 || options.max_n > 10) throw GraphError("survey: max_n must lie in [4, 10]");
    std::vector<WorkItem> items;
    std::vector<WorkItem> n10;
    auto add_topology = [&](const Topology& t) {
        const std::string g6 = to_graph6(t);
        for (auto& orbit : enumerate_signatures(t, options.reduce))
            (t.vertex_count == 10 ? n10 : items).push_back({g6, std::move(orbit)});
    };
    for (int n = 4; n <= options.max_n; n += 2)
        for (const auto& t : enumerate_cubic_graphs(n)) add_topology(t);
    for (const auto& t : options.extra_topologies) add_topology(t);

    SurveyResult result;
    result.summary.seed = options.seed;
    if (!n10.empty() && options.sample_n10 > 0 && n10.size() > options.sample_n10) {
        // Partial Fisher-Yates; mt19937_64 output is fixed by the standard.
        std::mt19937_64 rng(options.seed);
        for (std::size_t i = 0; i < options.sample_n10; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng() % (n10.size() - i));
            std::swap(n10[i], n10[j]);
        }
        n10.resize(options.sample_n10);
        result.summary.sample_n10 = options.sample_n10;
    }
    for (auto& item : n10) items.push_back(std::move(item));

    std::vector<InstanceReport> reports(items.size());
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, items.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) reports[i] = process(items[i], options, catalog);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(reports.begin(), reports.end(), [](const InstanceReport& a, const InstanceReport& b) {
        return std::tie(a.id, a.topology, a.signature) < std::tie(b.id, b.topology, b.signature);
    });

    auto& s = result.summary;
    for (const auto& r : reports) {
        s.instances += 1;
        s.weighted_instances += r.orbit_size;
        s.instances_by_n[r.n] += 1;
        s.branch_counts[r.branch] += 1;
        s.falsifications += r.falsifications > 0 || !r.bound10_ok ? 1 : 0;
        s.fallbacks += r.fallback ? 1 : 0;
        s.proof_gap_instances += r.proof_gaps > 0 ? 1 : 0;
        s.max_bound10_colours = std::max(s.max_bound10_colours, r.bound10_colours);
        if (r.chi) {
            s.chi_histogram[*r.chi] += 1;
            s.weighted_chi_histogram[*r.chi] += r.orbit_size;
            if (!s.max_chi || *r.chi > *s.max_chi) {
                s.max_chi = r.chi;
                s.max_chi_witness = r.id;
            }
            if (*r.chi > 10 || (r.bound10_ok && *r.chi > r.bound10_colours)) s.chi_violations += 1;
        }
        if (r.sp9star_ok && !*r.sp9star_ok) s.sp9star_failures += 1;
    }
    result.instances = std::move(reports);
    return result;
}

std::string report_jsonl(const SurveyResult& result, bool timings) {
    std::string out;
    for (const auto& r : result.instances) {
        nlohmann::json j{{"id", r.id},
                         {"n", r.n},
                         {"topology", r.topology},
                         {"signature", r.signature},
                         {"orbit_size", r.orbit_size},
                         {"branch", r.branch},
                         {"fallback", r.fallback},
                         {"proof_gaps", r.proof_gaps},
                         {"falsifications", r.falsifications},
                         {"bound10_colours", r.bound10_colours},
                         {"bound10_ok", r.bound10_ok}};
        j["chi"] = r.chi ? nlohmann::json(*r.chi) : nlohmann::json(nullptr);
        j["sp9star_ok"] = r.sp9star_ok ? nlohmann::json(*r.sp9star_ok) : nlohmann::json(nullptr);
        if (!r.error.empty()) j["error"] = r.error;
        if (timings) j["time_us"] = r.time_us;
        out += j.dump();
        out += '\n';
    }
    const auto& s = result.summary;
    nlohmann::json summary{{"summary", true},
                           {"instances", s.instances},
                           {"weighted_instances", s.weighted_instances},
                           {"falsifications", s.falsifications},
                           {"fallbacks", s.fallbacks},
                           {"proof_gap_instances", s.proof_gap_instances},
                           {"chi_violations", s.chi_violations},
                           {"sp9star_failures", s.sp9star_failures},
                           {"max_bound10_colours", s.max_bound10_colours},
                           {"seed", s.seed},
                           {"sample_n10", s.sample_n10},
                           {"passed", s.passed()}};
    auto keyed = [](const auto& m) {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : m) {
            if constexpr (std::is_same_v<std::decay_t<decltype(k)>, std::string>)
                j[k] = v;
            else
                j[std::to_string(k)] = v;
        }
        return j;
    };
    summary["instances_by_n"] = keyed(s.instances_by_n);
    summary["chi_histogram"] = keyed(s.chi_histogram);
    summary["weighted_chi_histogram"] = keyed(s.weighted_chi_histogram);
    summary["branch_counts"] = keyed(s.branch_counts);
    summary["max_chi"] = s.max_chi ? nlohmann::json(*s.max_chi) : nlohmann::json(nullptr);
    summary["max_chi_witness"] = s.max_chi_witness;
    summary["lower_bound_reference"] = 8;
    summary["upper_bound_asserted"] = 10;
    out += summary.dump();
    out += '\n';
    return out;
}

std::vector<VerifyItem> run_verify_suite(const TargetCatalog& catalog) {
    std::vector<VerifyItem> items;
    const SignedGraph& sp9 = catalog.sp9;

    auto adjacency = verify_sp9_adjacency(sp9);
    int edges = adjacency.bullets[0].edges_checked + adjacency.bullets[4].edges_checked;
    items.push_back({"adjacency lemma: 8 common-neighbour bullets", adjacency.all_passed(),
                     std::to_string(edges) + " edges checked"});

    // Same counts through the solver: paths u - w - v with u, v pinned.
    bool counts_ok = true;
    for (const auto& e : sp9.edges()) {
        const std::array<int, 4> expected =
            e.sign == Sign::Positive ? std::array<int, 4>{1, 2, 2, 2} : std::array<int, 4>{2, 2, 2, 1};
        int slot = 0;
        for (Sign a : {Sign::Positive, Sign::Negative})
            for (Sign b : {Sign::Positive, Sign::Negative}) {
                SignedGraph path(3, {{0, 2, a}, {1, 2, b}});
                auto count = count_homomorphisms(path, sp9, PinSet{{0, e.u}, {1, e.v}});
                counts_ok &= count == static_cast<std::uint64_t>(expected[slot++]);
            }
    }
    items.push_back({"adjacency lemma: pinned homomorphism counts", counts_ok, "(1,2,2,2) / (2,2,2,1) per edge"});

    items.push_back({"SP_9 isomorphic to its sign flip", canonical_form(sp9) == canonical_form(flip_signs(sp9)), ""});

    try {
        auto derived = derive_k4s_obstructions(sp9);
        bool same = canonical_form(derived.k4s_plus.graph) == canonical_form(catalog.k4s_plus.graph) &&
                    canonical_form(derived.k4s_minus.graph) == canonical_form(catalog.k4s_minus.graph);
        bool flip_ok = canonical_form(flip_signs(derived.k4s_plus.graph)) == canonical_form(derived.k4s_minus.graph);
        auto same_sign = [](const SignedGraph& g) {
            int a = 0;
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                auto c = classify_vertex(g, v);
                a += c == VertexClass::AllPositive || c == VertexClass::AllNegative;
            }
            return a;
        };
        bool remark_ok = same_sign(derived.k4s_plus.graph) >= 3 && same_sign(derived.k4s_minus.graph) >= 3;
        items.push_back({"obstruction derivation", same && flip_ok && remark_ok,
                         std::to_string(derived.failing_masks.size()) + " of 128 signatures fail, 2 classes"});
    } catch (const GraphError& e) {
        items.push_back({"obstruction derivation", false, e.what()});
    }

    auto ext = verify_extension_lemmas(catalog);
    items.push_back({"extension lemmas into SP_9 dagger", ext.all_passed(),
                     std::to_string(ext.passed_count()) + " of " + std::to_string(ext.cases.size()) + " cases"});

    const auto& d = catalog.sp9_dagger;
    auto swapped = make_dagger(sp9, d.nminus, d.nplus);
    auto swapped_plus = extension_cases(swapped.graph, swapped.z, catalog.k4s_plus);
    items.push_back({"negative control: swapped z neighbourhoods reject k4s+", swapped_plus.all_failed(),
                     std::to_string(swapped_plus.passed_count()) + " cases unexpectedly pass"});

    bool plain_fails = true;
    for (Vertex j = 0; j < 9; ++j) plain_fails &= extension_cases(sp9, j, catalog.k4s_plus).all_failed();
    items.push_back({"negative control: x5 pinned inside plain SP_9 rejects k4s+", plain_fails, ""});
    return items;
}

}  // namespace sg

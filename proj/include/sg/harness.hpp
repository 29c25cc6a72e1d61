#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sg/io.hpp"
#include "sg/signed_graph.hpp"
#include "sg/targets.hpp"

namespace sg {

/// Connected 3-regular simple graphs on n vertices, one per isomorphism
/// class, each in canonical labelling, sorted by canonical form.
/// Supported n: 4, 6, 8, 10.
std::vector<Topology> enumerate_cubic_graphs(int n);

/// Automorphisms of an unsigned topology, as vertex permutations.
std::vector<std::vector<Vertex>> topology_automorphisms(const Topology& t);

struct SignatureOrbit {
    SignedGraph graph;
    std::uint64_t mask = 0;        // bit i set: edge i negative
    std::uint64_t orbit_size = 1;  // signatures represented
};

/// All 2^m signatures, or with `reduce` one least-mask representative per
/// orbit of the topology's automorphism group.
std::vector<SignatureOrbit> enumerate_signatures(const Topology& t, bool reduce);

/// Orbit representatives of every connected cubic signed graph with 4 <= n <= max_n.
std::vector<SignedGraph> cubic_sweep_instances(int max_n);

struct SurveyOptions {
    int max_n = 8;
    bool reduce = true;
    bool exact_chi = true;
    bool sp9star = false;
    /// Instances drawn at n = 10 (all of them when 0).
    std::size_t sample_n10 = 1000;
    std::uint64_t seed = 20240917;
    unsigned threads = 0;  // 0: hardware concurrency
    /// Extra topologies swept alongside the generated ones (e.g. from graph6).
    std::vector<Topology> extra_topologies;
};

struct InstanceReport {
    std::string id;
    int n = 0;
    std::string topology;  // graph6
    std::string signature;
    std::uint64_t orbit_size = 1;
    std::string branch;
    bool fallback = false;
    int proof_gaps = 0;
    int falsifications = 0;
    int bound10_colours = 0;
    bool bound10_ok = false;
    std::optional<int> chi;
    std::optional<bool> sp9star_ok;
    std::string error;
    double time_us = 0;
};

struct SweepSummary {
    std::size_t instances = 0;
    std::uint64_t weighted_instances = 0;
    std::map<int, std::size_t> instances_by_n;
    std::map<int, std::size_t> chi_histogram;
    std::map<int, std::uint64_t> weighted_chi_histogram;
    std::optional<int> max_chi;
    std::string max_chi_witness;
    int max_bound10_colours = 0;
    std::size_t falsifications = 0;
    std::size_t fallbacks = 0;
    std::size_t proof_gap_instances = 0;
    std::size_t chi_violations = 0;
    std::size_t sp9star_failures = 0;
    std::map<std::string, std::size_t> branch_counts;
    std::uint64_t seed = 0;
    std::size_t sample_n10 = 0;

    bool passed() const { return falsifications == 0 && chi_violations == 0 && sp9star_failures == 0; }
};

struct SurveyResult {
    SweepSummary summary;
    std::vector<InstanceReport> instances;  // sorted by id
};

SurveyResult run_survey(const SurveyOptions& options, const TargetCatalog& catalog = default_catalog());

/// One JSON object per instance, then a summary object; `timings` controls the time_us field.
std::string report_jsonl(const SurveyResult& result, bool timings = true);

struct VerifyItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Adjacency lemma, obstruction derivation, extension lemmas and their negative controls.
std::vector<VerifyItem> run_verify_suite(const TargetCatalog& catalog = default_catalog());

}  // namespace sg

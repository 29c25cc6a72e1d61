#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "sg/bound10.hpp"
#include "sg/colouring.hpp"
#include "sg/harness.hpp"
#include "sg/hom_search.hpp"
#include "sg/io.hpp"
#include "sg/targets.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitFalsification = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

sg::SignedGraph load_graph(const std::string& path) {
    try {
        return sg::parse_signed_graph(read_file(path));
    } catch (const sg::ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const sg::GraphError& e) {
        throw InputError(path + ": " + e.what());
    }
}

sg::Colouring load_colouring(const std::string& path, int vertex_count) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    sg::Colouring c;
    const nlohmann::json& labels = j.is_array() ? j : j.at("labels");
    for (const auto& x : labels) c.labels.push_back(x.get<int>());
    if (j.is_object() && j.contains("k")) {
        c.k = j["k"].get<int>();
    } else {
        int top = -1;
        for (int x : c.labels) top = std::max(top, x);
        c.k = top + 1;
    }
    if (static_cast<int>(c.labels.size()) != vertex_count)
        throw InputError(path + ": expected " + std::to_string(vertex_count) + " labels");
    return c;
}

sg::PinSet parse_pins(const std::vector<std::string>& specs) {
    sg::PinSet pins;
    for (const auto& spec : specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw InputError("pin '" + spec + "' must look like u=a");
        try {
            pins.pin(std::stoi(spec.substr(0, eq)), std::stoi(spec.substr(eq + 1)));
        } catch (const std::logic_error&) {
            throw InputError("pin '" + spec + "' must look like u=a");
        }
    }
    return pins;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colourings and homomorphisms of 2-edge-coloured graphs"};
    app.require_subcommand(1);

    auto* targets = app.add_subcommand("targets", "Fixed target graphs");
    auto* dump = targets->add_subcommand("dump", "Print a target in .sg format");
    std::string which;
    dump->add_option("--which", which, "sp9 | sp9dagger | sp9star | k4s+ | k4s-")->required();
    targets->require_subcommand(1);

    auto* hom = app.add_subcommand("hom", "Search for a sign-preserving homomorphism G -> H");
    std::string hom_g, hom_h;
    std::vector<std::string> pin_specs;
    bool count = false;
    hom->add_option("G", hom_g)->required();
    hom->add_option("H", hom_h)->required();
    hom->add_option("--pin", pin_specs, "u=a: source vertex u must map to a");
    hom->add_flag("--count", count, "Count all homomorphisms");

    auto* chi = app.add_subcommand("chi", "Exact chromatic number, or check a colouring");
    std::string chi_g;
    std::string check_path;
    bool check = false;
    chi->add_flag("--check", check, "Validate the labelling in colours.json instead of solving");
    chi->add_option("G", chi_g)->required();
    chi->add_option("colours", check_path, "JSON array of labels, or {\"k\": k, \"labels\": [...]}");

    auto* bound = app.add_subcommand("bound10", "Constructive colouring of a connected cubic graph");
    std::string bound_g;
    bool trace = false;
    bound->add_option("G", bound_g)->required();
    bound->add_flag("--trace", trace, "Include the branch trace");

    auto* survey = app.add_subcommand("survey", "Sweep connected cubic signed graphs");
    sg::SurveyOptions opts;
    bool no_reduce = false;
    bool no_exact_chi = false;
    bool exact_chi_flag = false;
    bool no_timings = false;
    std::string out_path;
    std::string g6_file;
    survey->add_option("--max-n", opts.max_n, "Largest order swept (4..10)")->check(CLI::Range(4, 10));
    survey->add_flag("--no-reduce", no_reduce, "Sweep every signature rather than one per orbit");
    survey->add_flag("--exact-chi", exact_chi_flag, "Cross-check with the exact chromatic number (default)");
    survey->add_flag("--no-exact-chi", no_exact_chi, "Skip the exact chromatic number");
    survey->add_flag("--sp9star", opts.sp9star, "Check that every instance maps to SP_9 star");
    survey->add_option("--sample", opts.sample_n10, "Instances sampled at n = 10 (0: all)");
    survey->add_option("--seed", opts.seed, "Sampling seed");
    survey->add_option("--threads", opts.threads, "Worker threads (0: all cores)");
    survey->add_option("--g6-file", g6_file, "Extra cubic topologies, one graph6 string per line");
    survey->add_flag("--no-timings", no_timings, "Omit time_us fields");
    survey->add_option("--out", out_path, "Write the JSONL report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run the lemma verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInputError;
    }

    try {
        if (dump->parsed()) {
            const auto& catalog = sg::default_catalog();
            std::cout << sg::to_sg_text(sg::catalog_graph(catalog, which), sg::describe_target(catalog, which));
            return 0;
        }
        if (hom->parsed()) {
            auto g = load_graph(hom_g);
            auto h = load_graph(hom_h);
            auto pins = parse_pins(pin_specs);
            for (auto [s, t] : pins.pins())
                if (s < 0 || s >= g.vertex_count() || t < 0 || t >= h.vertex_count())
                    throw InputError("pin " + std::to_string(s) + "=" + std::to_string(t) + " out of range");
            if (count) {
                auto c = sg::count_homomorphisms(g, h, pins);
                std::cout << c << '\n';
                return c > 0 ? 0 : 1;
            }
            auto phi = sg::find_homomorphism(g, h, pins);
            nlohmann::json j{{"found", phi.has_value()}};
            if (phi) j["map"] = *phi;
            std::cout << j.dump() << '\n';
            return phi ? 0 : 1;
        }
        if (chi->parsed()) {
            auto g = load_graph(chi_g);
            if (check != !check_path.empty()) throw InputError("--check takes a graph and a colours.json file");
            if (check) {
                auto c = load_colouring(check_path, g.vertex_count());
                bool ok = sg::validate_colouring(g, c);
                std::cout << nlohmann::json{{"valid", ok}, {"k", c.k}}.dump() << '\n';
                return ok ? 0 : 1;
            }
            if (g.vertex_count() == 0) throw InputError("empty graph");
            auto r = sg::chromatic(g);
            std::cout << nlohmann::json{{"chi", r.chi}, {"labels", r.witness.labels}}.dump() << '\n';
            return 0;
        }
        if (bound->parsed()) {
            auto g = load_graph(bound_g);
            try {
                auto r = sg::ten_colouring(g);
                nlohmann::json j{{"k", r.colouring.k},
                                 {"colours_used", r.colouring.colours_used()},
                                 {"labels", r.colouring.labels},
                                 {"branch", r.trace.branch_name()},
                                 {"valid", sg::validate_colouring(g, r.colouring)}};
                if (trace) j["trace"] = nlohmann::json::parse(r.trace.to_json());
                std::cout << j.dump() << '\n';
                return 0;
            } catch (const sg::PreconditionError& e) {
                throw InputError(e.what());
            } catch (const sg::InternalFalsification& e) {
                std::cerr << "InternalFalsification: " << e.what() << '\n';
                return kExitFalsification;
            }
        }
        if (survey->parsed()) {
            opts.reduce = !no_reduce;
            opts.exact_chi = exact_chi_flag || !no_exact_chi;
            if (!g6_file.empty()) {
                std::istringstream lines(read_file(g6_file));
                std::string line;
                while (std::getline(lines, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    auto t = sg::parse_graph6(line);
                    auto g = sg::with_sign_mask(t, 0);
                    if (!sg::is_cubic(g) || !sg::is_connected(g))
                        throw InputError("graph6 topology '" + line + "' is not connected cubic");
                    opts.extra_topologies.push_back(std::move(t));
                }
            }
            auto result = sg::run_survey(opts);
            auto text = sg::report_jsonl(result, !no_timings);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw InputError("cannot write " + out_path);
                out << text;
            }
            const auto& s = result.summary;
            std::cerr << "instances " << s.instances << ", falsifications " << s.falsifications << ", fallbacks "
                      << s.fallbacks << ", max chi " << (s.max_chi ? std::to_string(*s.max_chi) : "-") << '\n';
            return s.passed() ? 0 : 1;
        }
        if (verify->parsed()) {
            bool all = true;
            for (const auto& item : sg::run_verify_suite()) {
                std::cout << (item.passed ? "PASS  " : "FAIL  ") << item.name;
                if (!item.detail.empty()) std::cout << " (" << item.detail << ")";
                std::cout << '\n';
                all &= item.passed;
            }
            return all ? 0 : 1;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const sg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const sg::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return 0;
}

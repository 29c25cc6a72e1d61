#include "sg/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sg {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

long parse_index(std::string_view word, int line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
        throw ParseError("expected a nonnegative integer, got '" + std::string(word) + "'", line);
    return value;
}

}  // namespace

SignedGraph parse_signed_graph(std::string_view text) {
    int line_no = 0;
    bool have_header = false;
    long n = 0;
    long m = 0;
    std::vector<SignedEdge> edges;
    std::vector<std::uint64_t> seen;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty()) continue;

        if (words[0] == "p") {
            if (have_header) throw ParseError("second header line", line_no);
            if (words.size() != 4 || words[1] != "sg") throw ParseError("header must read 'p sg <n> <m>'", line_no);
            n = parse_index(words[2], line_no);
            m = parse_index(words[3], line_no);
            if (n > kMaxVertices) throw ParseError("more than 64 vertices", line_no);
            have_header = true;
            seen.assign(n, 0);
        } else if (words[0] == "e") {
            if (!have_header) throw ParseError("edge before header", line_no);
            if (words.size() != 4) throw ParseError("edge line must read 'e <u> <v> <+|->'", line_no);
            long u = parse_index(words[1], line_no);
            long v = parse_index(words[2], line_no);
            if (u >= n || v >= n) throw ParseError("vertex index out of range", line_no);
            if (u == v) throw ParseError("loop at vertex " + std::to_string(u), line_no);
            if (words[3].size() != 1 || !sign_from_char(words[3][0]))
                throw ParseError("sign must be '+' or '-'", line_no);
            if ((seen[u] >> v) & 1U)
                throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v), line_no);
            seen[u] |= std::uint64_t{1} << v;
            seen[v] |= std::uint64_t{1} << u;
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), *sign_from_char(words[3][0])});
        } else {
            throw ParseError("unrecognised line '" + std::string(words[0]) + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("missing 'p sg' header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return SignedGraph(static_cast<int>(n), edges);
}

std::string to_sg_text(const SignedGraph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "p sg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << to_char(e.sign) << '\n';
    return out.str();
}

Topology parse_graph6(std::string_view g6) {
    if (g6.starts_with(">>graph6<<")) g6.remove_prefix(10);
    while (!g6.empty() && (g6.back() == '\n' || g6.back() == '\r')) g6.remove_suffix(1);
    for (char c : g6)
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside [63, 126]");
    if (g6.empty()) throw ParseError("graph6: empty string");

    std::size_t pos = 0;
    long n = 0;
    if (g6[0] != 126) {
        n = g6[0] - 63;
        pos = 1;
    } else if (g6.size() >= 4 && g6[1] != 126) {
        n = (long{g6[1] - 63} << 12) | (long{g6[2] - 63} << 6) | long{g6[3] - 63};
        pos = 4;
    } else {
        throw ParseError("graph6: unsupported vertex count encoding");
    }
    if (n > kMaxVertices) throw ParseError("graph6: more than 64 vertices");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (g6.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                         std::to_string(g6.size() - pos));

    Topology t{static_cast<int>(n), {}};
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = g6[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) t.edges.emplace_back(i, j);
        }
    }
    for (; k < bytes * 6; ++k)
        if (((g6[pos + k / 6] - 63) >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

std::string to_graph6(const Topology& t) {
    const int n = t.vertex_count;
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    std::vector<std::uint64_t> adj(n, 0);
    for (auto [u, v] : t.edges) {
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<int>((adj[i] >> j) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Topology topology_of(const SignedGraph& g) {
    Topology t{g.vertex_count(), {}};
    for (const auto& e : g.edges()) t.edges.emplace_back(e.u, e.v);
    return t;
}

SignedGraph with_signs(const Topology& t, std::string_view signs) {
    if (signs.size() != t.edges.size())
        throw ParseError("sign string has length " + std::to_string(signs.size()) + " but the graph has " +
                         std::to_string(t.edges.size()) + " edges");
    std::vector<SignedEdge> edges;
    edges.reserve(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        auto s = sign_from_char(signs[i]);
        if (!s) throw ParseError(std::string("bad sign character '") + signs[i] + "'");
        edges.push_back({t.edges[i].first, t.edges[i].second, *s});
    }
    return SignedGraph(t.vertex_count, edges);
}

SignedGraph with_sign_mask(const Topology& t, std::uint64_t mask) {
    std::vector<SignedEdge> edges;
    edges.reserve(t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        edges.push_back({t.edges[i].first, t.edges[i].second, ((mask >> i) & 1U) ? Sign::Negative : Sign::Positive});
    return SignedGraph(t.vertex_count, edges);
}

SignedGraph parse_graph6_with_signs(std::string_view g6, std::string_view signs) {
    return with_signs(parse_graph6(g6), signs);
}

std::string sign_string(const SignedGraph& g) {
    std::string s;
    for (const auto& e : g.edges()) s.push_back(to_char(e.sign));
    return s;
}

}  // namespace sg

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sg/signed_graph.hpp"

namespace sg {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Reads the `.sg` edge-list format:
///
///     # comment
///     p sg <n> <m>
///     e <u> <v> <+|->      (m times)
///
/// Blank lines and `#` comments are ignored anywhere.
SignedGraph parse_signed_graph(std::string_view text);

/// Inverse of parse_signed_graph. Each entry of `comments` becomes a `# ` line before the header.
std::string to_sg_text(const SignedGraph& g, const std::vector<std::string>& comments = {});

/// Unsigned topology: vertex count plus sorted (u < v) pairs.
struct Topology {
    int vertex_count = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    friend bool operator==(const Topology&, const Topology&) = default;
};

Topology parse_graph6(std::string_view g6);
std::string to_graph6(const Topology& t);
Topology topology_of(const SignedGraph& g);

/// `signs[i]` is applied to the i-th edge of the graph6 graph in lexicographic (u, v) order.
SignedGraph parse_graph6_with_signs(std::string_view g6, std::string_view signs);

/// Applies one sign per topology edge, in the topology's edge order.
SignedGraph with_signs(const Topology& t, std::string_view signs);

/// Bit i of `mask` set means edge i is negative.
SignedGraph with_sign_mask(const Topology& t, std::uint64_t mask);

/// Sign string of g's edges in lexicographic order, e.g. "++-".
std::string sign_string(const SignedGraph& g);

}  // namespace sg

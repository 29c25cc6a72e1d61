#include "sg/hom_search.hpp"

#include <string>

namespace sg {

PinSet::PinSet(std::initializer_list<std::pair<Vertex, Vertex>> pins) {
    for (auto [s, t] : pins) pin(s, t);
}

void PinSet::pin(Vertex source, Vertex target) {
    for (auto [s, t] : pins_)
        if (s == source) throw GraphError("source vertex " + std::to_string(source) + " pinned twice");
    pins_.emplace_back(source, target);
}

bool check_homomorphism(const SignedGraph& source, const SignedGraph& target, std::span<const Vertex> map) {
    if (static_cast<int>(map.size()) != source.vertex_count()) throw GraphError("vertex map has the wrong length");
    for (Vertex img : map)
        if (img < 0 || img >= target.vertex_count()) throw GraphError("vertex map is not total or out of range");
    for (const auto& e : source.edges())
        if (target.sign(map[e.u], map[e.v]) != e.sign) return false;
    return true;
}

namespace {

class HomSolver {
  public:
    HomSolver(const SignedGraph& source, const SignedGraph& target) : source_(source), target_(target) {
        const int n = source.vertex_count();
        const int t = target.vertex_count();
        const std::uint64_t all = t == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
        initial_.assign(n, all);
        std::uint64_t non_isolated = 0;
        for (Vertex h = 0; h < t; ++h)
            if (target.degree(h) > 0) non_isolated |= std::uint64_t{1} << h;
        for (Vertex v = 0; v < n; ++v)
            if (source.degree(v) > 0) initial_[v] &= non_isolated;
    }

    /// False if some pin is out of range.
    bool apply_pins(const PinSet& pins) {
        for (auto [s, img] : pins.pins()) {
            if (s < 0 || s >= source_.vertex_count()) throw GraphError("pinned source vertex out of range");
            if (img < 0 || img >= target_.vertex_count()) return false;
            initial_[s] &= std::uint64_t{1} << img;
        }
        return true;
    }

    /// Runs the search over `scope`; `visit` returns false to stop. Returns false if stopped.
    bool run(std::uint64_t scope, const std::function<bool(std::span<const Vertex>)>& visit, VertexMap& map) {
        std::vector<std::uint64_t> domains = initial_;
        return search(domains, scope, visit, map);
    }

  private:
    bool search(std::vector<std::uint64_t>& domains, std::uint64_t open,
                const std::function<bool(std::span<const Vertex>)>& visit, VertexMap& map) {
        if (open == 0) return visit(map);
        Vertex pick = -1;
        int best = 65;
        for_each_bit(open, [&](Vertex v) {
            int size = std::popcount(domains[v]);
            if (size < best) {
                best = size;
                pick = v;
            }
        });
        if (best == 0) return true;
        const std::uint64_t rest = open & ~(std::uint64_t{1} << pick);
        const std::uint64_t pos_nb = source_.positive_neighbours(pick) & rest;
        const std::uint64_t neg_nb = source_.negative_neighbours(pick) & rest;
        std::vector<std::uint64_t> next(domains.size());
        std::uint64_t values = domains[pick];
        while (values != 0) {
            const Vertex img = std::countr_zero(values);
            values &= values - 1;
            next = domains;
            bool wiped = false;
            const std::uint64_t tp = target_.positive_neighbours(img);
            const std::uint64_t tn = target_.negative_neighbours(img);
            for_each_bit(pos_nb, [&](Vertex w) { wiped |= (next[w] &= tp) == 0; });
            for_each_bit(neg_nb, [&](Vertex w) { wiped |= (next[w] &= tn) == 0; });
            if (wiped) continue;
            map[pick] = img;
            if (!search(next, rest, visit, map)) return false;
        }
        map[pick] = kUnassigned;
        return true;
    }

    const SignedGraph& source_;
    const SignedGraph& target_;
    std::vector<std::uint64_t> initial_;
};

std::uint64_t vertex_mask(const std::vector<Vertex>& vs) {
    std::uint64_t m = 0;
    for (Vertex v : vs) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

std::optional<VertexMap> find_homomorphism(const SignedGraph& source, const SignedGraph& target, const PinSet& pins) {
    HomSolver solver(source, target);
    if (!solver.apply_pins(pins)) return std::nullopt;
    VertexMap map(source.vertex_count(), kUnassigned);
    for (const auto& component : connected_components(source)) {
        bool found = false;
        VertexMap scratch(source.vertex_count(), kUnassigned);
        solver.run(vertex_mask(component), [&](std::span<const Vertex> m) {
            for (Vertex v : component) map[v] = m[v];
            found = true;
            return false;
        }, scratch);
        if (!found) return std::nullopt;
    }
    return map;
}

std::uint64_t count_homomorphisms(const SignedGraph& source, const SignedGraph& target, const PinSet& pins) {
    HomSolver solver(source, target);
    if (!solver.apply_pins(pins)) return 0;
    std::uint64_t total = 1;
    for (const auto& component : connected_components(source)) {
        std::uint64_t count = 0;
        VertexMap scratch(source.vertex_count(), kUnassigned);
        solver.run(vertex_mask(component), [&](std::span<const Vertex>) {
            ++count;
            return true;
        }, scratch);
        total *= count;
        if (total == 0) return 0;
    }
    return total;
}

std::uint64_t for_each_homomorphism(const SignedGraph& source, const SignedGraph& target, const PinSet& pins,
                                    const std::function<bool(std::span<const Vertex>)>& visit) {
    HomSolver solver(source, target);
    if (!solver.apply_pins(pins)) return 0;
    const int n = source.vertex_count();
    VertexMap map(n, kUnassigned);
    std::uint64_t visited = 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    solver.run(all, [&](std::span<const Vertex> m) {
        ++visited;
        return visit(m);
    }, map);
    return visited;
}

}  // namespace sg

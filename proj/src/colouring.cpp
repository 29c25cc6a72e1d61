#include "sg/colouring.hpp"

#include <algorithm>

namespace sg {

int Colouring::colours_used() const {
    std::vector<bool> used(std::max(k, 0), false);
    int count = 0;
    for (int c : labels)
        if (c >= 0 && c < k && !used[c]) {
            used[c] = true;
            ++count;
        }
    return count;
}

bool validate_colouring(const SignedGraph& g, const Colouring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.labels.size()) != n || c.k <= 0) return false;
    for (int label : c.labels)
        if (label < 0 || label >= c.k) return false;
    // pair_sign[i*k+j]: 0 unseen, 1 positive, 2 negative
    std::vector<std::uint8_t> pair_sign(static_cast<std::size_t>(c.k) * c.k, 0);
    for (const auto& e : g.edges()) {
        int a = c.labels[e.u];
        int b = c.labels[e.v];
        if (a == b) return false;
        std::uint8_t code = e.sign == Sign::Positive ? 1 : 2;
        auto& slot = pair_sign[static_cast<std::size_t>(std::min(a, b)) * c.k + std::max(a, b)];
        if (slot != 0 && slot != code) return false;
        slot = code;
    }
    return true;
}

SignedGraph implicit_target(const SignedGraph& g, const Colouring& c) {
    if (!validate_colouring(g, c)) throw GraphError("implicit_target: colouring is not valid");
    std::vector<SignedEdge> edges;
    std::vector<bool> seen(static_cast<std::size_t>(c.k) * c.k, false);
    for (const auto& e : g.edges()) {
        int a = std::min(c.labels[e.u], c.labels[e.v]);
        int b = std::max(c.labels[e.u], c.labels[e.v]);
        if (seen[static_cast<std::size_t>(a) * c.k + b]) continue;
        seen[static_cast<std::size_t>(a) * c.k + b] = true;
        edges.push_back({a, b, e.sign});
    }
    return SignedGraph(c.k, edges);
}

namespace {

class ColouringSearch {
  public:
    ColouringSearch(const SignedGraph& g, int k)
        : g_(g), k_(k), labels_(g.vertex_count(), -1), pos_count_(k * k, 0), neg_count_(k * k, 0) {}

    bool run() { return assign_next(0, 0); }
    const std::vector<int>& labels() const { return labels_; }

  private:
    // Colours c may take at vertex v given coloured neighbours, within 0..limit-1.
    std::uint64_t feasible(Vertex v, int limit) const {
        std::uint64_t ok = limit == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << limit) - 1;
        std::uint64_t seen_pos = 0;
        std::uint64_t seen_neg = 0;
        for_each_bit(g_.neighbours(v), [&](Vertex u) {
            int cu = labels_[u];
            if (cu < 0) return;
            ok &= ~(std::uint64_t{1} << cu);
            (g_.sign(v, u) == Sign::Positive ? seen_pos : seen_neg) |= std::uint64_t{1} << cu;
            const auto& clash = g_.sign(v, u) == Sign::Positive ? neg_count_ : pos_count_;
            for (int c = 0; c < limit; ++c)
                if (clash[c * k_ + cu] > 0) ok &= ~(std::uint64_t{1} << c);
        });
        // Two same-coloured neighbours reached by different signs rule out every colour.
        return (seen_pos & seen_neg) != 0 ? 0 : ok;
    }

    bool blocked(Vertex v) const {
        std::uint64_t seen_pos = 0;
        std::uint64_t seen_neg = 0;
        for_each_bit(g_.neighbours(v), [&](Vertex u) {
            if (labels_[u] >= 0)
                (g_.sign(v, u) == Sign::Positive ? seen_pos : seen_neg) |= std::uint64_t{1} << labels_[u];
        });
        return (seen_pos & seen_neg) != 0;
    }

    void record(Vertex v, int colour, int delta) {
        for_each_bit(g_.neighbours(v), [&](Vertex u) {
            int cu = labels_[u];
            if (cu < 0) return;
            auto& counts = g_.sign(v, u) == Sign::Positive ? pos_count_ : neg_count_;
            counts[colour * k_ + cu] += delta;
            counts[cu * k_ + colour] += delta;
        });
    }

    bool assign_next(int assigned, int used) {
        const int n = g_.vertex_count();
        if (assigned == n) return true;
        // Most constrained uncoloured vertex; new colours count as one option.
        Vertex pick = -1;
        int best = 1 << 30;
        int best_degree = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (labels_[v] >= 0) continue;
            int options = std::popcount(feasible(v, used)) + (used < k_ && !blocked(v) ? 1 : 0);
            int coloured_nb = 0;
            for_each_bit(g_.neighbours(v), [&](Vertex u) { coloured_nb += labels_[u] >= 0; });
            if (options < best || (options == best && coloured_nb > best_degree)) {
                best = options;
                best_degree = coloured_nb;
                pick = v;
            }
        }
        std::uint64_t options = feasible(pick, used);
        if (used < k_ && !blocked(pick)) options |= std::uint64_t{1} << used;
        while (options != 0) {
            int colour = std::countr_zero(options);
            options &= options - 1;
            record(pick, colour, +1);
            labels_[pick] = colour;
            if (assign_next(assigned + 1, std::max(used, colour + 1))) return true;
            labels_[pick] = -1;
            record(pick, colour, -1);
        }
        return false;
    }

    const SignedGraph& g_;
    int k_;
    std::vector<int> labels_;
    std::vector<int> pos_count_;
    std::vector<int> neg_count_;
};

int greedy_clique_size(const SignedGraph& g) {
    int best = g.vertex_count() > 0 ? 1 : 0;
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        std::uint64_t candidates = g.neighbours(start);
        int size = 1;
        while (candidates != 0) {
            Vertex next = std::countr_zero(candidates);
            candidates &= g.neighbours(next);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

std::optional<Colouring> find_k_colouring(const SignedGraph& g, int k) {
    if (k <= 0) return g.vertex_count() == 0 ? std::optional<Colouring>(Colouring{k, {}}) : std::nullopt;
    if (k > 64) k = 64;
    ColouringSearch search(g, k);
    if (!search.run()) return std::nullopt;
    return Colouring{k, search.labels()};
}

ChromaticResult chromatic(const SignedGraph& g) {
    if (g.vertex_count() == 0) throw GraphError("chromatic number of the empty graph is undefined");
    for (int k = std::max(1, greedy_clique_size(g));; ++k) {
        if (auto c = find_k_colouring(g, k)) return {k, *c};
    }
}

int chromatic_number(const SignedGraph& g) { return chromatic(g).chi; }

}  // namespace sg

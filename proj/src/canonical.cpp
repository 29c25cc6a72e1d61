#include "sg/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace sg {

namespace {

using Colouring = std::vector<int>;

int class_count(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Replaces colours by their ranks under `key`, preserving the order of the
// previous colours.
template <typename Key>
Colouring rank_by(const std::vector<Key>& keys) {
    const int n = static_cast<int>(keys.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    Colouring out(n);
    int rank = -1;
    for (int i = 0; i < n; ++i) {
        if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++rank;
        out[order[i]] = rank;
    }
    return out;
}

Colouring refine(const SignedGraph& g, Colouring colours) {
    const int n = g.vertex_count();
    int classes = class_count(colours);
    while (true) {
        std::vector<std::vector<int>> keys(n);
        for (Vertex v = 0; v < n; ++v) {
            auto& key = keys[v];
            for_each_bit(g.positive_neighbours(v), [&](Vertex u) { key.push_back(2 * colours[u]); });
            for_each_bit(g.negative_neighbours(v), [&](Vertex u) { key.push_back(2 * colours[u] + 1); });
            std::sort(key.begin(), key.end());
            key.insert(key.begin(), colours[v]);
        }
        Colouring next = rank_by(keys);
        int next_classes = class_count(next);
        colours = std::move(next);
        if (next_classes == classes) return colours;
        classes = next_classes;
    }
}

class CanonicalSearch {
  public:
    explicit CanonicalSearch(const SignedGraph& g) : g_(g) {}

    void run() {
        const int n = g_.vertex_count();
        std::vector<std::pair<int, int>> degree_keys(n);
        for (Vertex v = 0; v < n; ++v)
            degree_keys[v] = {std::popcount(g_.positive_neighbours(v)), std::popcount(g_.negative_neighbours(v))};
        visit(refine(g_, rank_by(degree_keys)));
    }

    CanonicalResult result() && {
        CanonicalResult r;
        r.form = std::move(best_form_);
        r.labelling = best_leaf_;
        // Leaves reaching the minimum differ from the best leaf by an automorphism.
        const int n = g_.vertex_count();
        std::vector<Vertex> inverse_best(n);
        for (Vertex v = 0; v < n; ++v) inverse_best[best_leaf_[v]] = v;
        for (const auto& leaf : best_leaves_) {
            std::vector<Vertex> aut(n);
            for (Vertex v = 0; v < n; ++v) aut[v] = inverse_best[leaf[v]];
            r.automorphisms.push_back(std::move(aut));
        }
        std::sort(r.automorphisms.begin(), r.automorphisms.end());
        return r;
    }

  private:
    void visit(const Colouring& colours) {
        const int n = g_.vertex_count();
        const int classes = class_count(colours);
        if (classes == n) {
            leaf(colours);
            return;
        }
        // Target cell: the first colour class with more than one vertex.
        std::vector<int> sizes(classes, 0);
        for (int c : colours) ++sizes[c];
        int target = 0;
        while (sizes[target] == 1) ++target;
        for (Vertex v = 0; v < n; ++v) {
            if (colours[v] != target) continue;
            Colouring split(n);
            for (Vertex u = 0; u < n; ++u) split[u] = 2 * colours[u] + (u == v ? 0 : 1);
            visit(refine(g_, rank_by(split)));
        }
    }

    void leaf(const Colouring& labelling) {
        const int n = g_.vertex_count();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v) at[labelling[v]] = v;
        std::string form;
        form.reserve(2 + n * (n - 1) / 2);
        form.push_back(static_cast<char>('0' + n / 10));
        form.push_back(static_cast<char>('0' + n % 10));
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto s = g_.sign(at[i], at[j]);
                form.push_back(!s ? '0' : (*s == Sign::Positive ? '+' : '-'));
            }
        }
        if (best_leaves_.empty() || form < best_form_) {
            best_form_ = std::move(form);
            best_leaf_ = labelling;
            best_leaves_.clear();
            best_leaves_.push_back(labelling);
        } else if (form == best_form_) {
            best_leaves_.push_back(labelling);
        }
    }

    const SignedGraph& g_;
    std::string best_form_;
    std::vector<Vertex> best_leaf_;
    std::vector<std::vector<Vertex>> best_leaves_;
};

}  // namespace

CanonicalResult canonicalize(const SignedGraph& g) {
    if (g.vertex_count() == 0) return {"00", {}, {{}}};
    CanonicalSearch search(g);
    search.run();
    return std::move(search).result();
}

std::string canonical_form(const SignedGraph& g) { return canonicalize(g).form; }

std::string canonical_id(const SignedGraph& g) {
    // Pack the ternary adjacency codes two bits each, then hex-encode.
    const std::string form = canonical_form(g);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out = form.substr(0, 2);
    out.push_back(':');
    int acc = 0;
    int bits = 0;
    for (std::size_t i = 2; i < form.size(); ++i) {
        int code = form[i] == '0' ? 0 : (form[i] == '+' ? 1 : 2);
        acc = (acc << 2) | code;
        bits += 2;
        if (bits == 4) {
            out.push_back(kHex[acc]);
            acc = 0;
            bits = 0;
        }
    }
    if (bits > 0) out.push_back(kHex[acc << (4 - bits)]);
    return out;
}

}  // namespace sg

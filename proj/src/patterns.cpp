#include "sg/patterns.hpp"

#include <algorithm>
#include <set>

namespace sg {

std::vector<Embedding> find_triangles(const SignedGraph& g) {
    std::vector<Embedding> out;
    for (const auto& e : g.edges()) {
        std::uint64_t common = g.neighbours(e.u) & g.neighbours(e.v);
        common &= ~((std::uint64_t{2} << e.v) - 1);  // third vertex above v
        for_each_bit(common, [&](Vertex w) { out.push_back({"K3", {e.u, e.v, w}}); });
    }
    return out;
}

bool is_induced_copy(const SignedGraph& host, const SignedGraph& pattern, const std::vector<Vertex>& map) {
    const int k = pattern.vertex_count();
    if (static_cast<int>(map.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        if (map[i] < 0 || map[i] >= host.vertex_count()) return false;
        for (int j = 0; j < i; ++j) {
            if (map[i] == map[j]) return false;
            if (pattern.sign(i, j) != host.sign(map[i], map[j])) return false;
        }
    }
    return true;
}

namespace {

class InducedMatcher {
  public:
    InducedMatcher(const SignedGraph& host, const SignedGraph& pattern) : host_(host), pattern_(pattern) {
        map_.assign(pattern.vertex_count(), -1);
    }

    template <typename F>
    void run(F&& emit) {
        extend(0, 0, emit);
    }

  private:
    template <typename F>
    void extend(int depth, std::uint64_t used, F& emit) {
        if (depth == pattern_.vertex_count()) {
            emit(map_);
            return;
        }
        for (Vertex h = 0; h < host_.vertex_count(); ++h) {
            if ((used >> h) & 1U) continue;
            if (host_.degree(h) < pattern_.degree(depth)) continue;
            bool ok = true;
            for (int j = 0; j < depth && ok; ++j) ok = pattern_.sign(depth, j) == host_.sign(h, map_[j]);
            if (!ok) continue;
            map_[depth] = h;
            extend(depth + 1, used | (std::uint64_t{1} << h), emit);
        }
        map_[depth] = -1;
    }

    const SignedGraph& host_;
    const SignedGraph& pattern_;
    std::vector<Vertex> map_;
};

}  // namespace

std::vector<Embedding> find_induced_copies(const SignedGraph& host, const SignedGraph& pattern, CopyMode mode,
                                           const std::string& pattern_id) {
    std::vector<Embedding> out;
    if (pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count()) return out;
    std::set<std::uint64_t> images;
    InducedMatcher matcher(host, pattern);
    // Maps are produced in lexicographic order, so the first map per image set is the least.
    matcher.run([&](const std::vector<Vertex>& map) {
        if (mode == CopyMode::ModuloAutomorphism) {
            std::uint64_t image = 0;
            for (Vertex v : map) image |= std::uint64_t{1} << v;
            if (!images.insert(image).second) return;
        }
        out.push_back({pattern_id, map});
    });
    return out;
}

}  // namespace sg

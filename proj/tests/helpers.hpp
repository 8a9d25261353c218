// Shared shorthand for the unit tests plus the independent re-implementations
// (reachability-based strong connectivity, rule-based extension images) that
// the library results are checked against.
#ifndef MNG_TESTS_HELPERS_HPP
#define MNG_TESTS_HELPERS_HPP

#include <mng/graph.hpp>
#include <mng/search.hpp>

#include <algorithm>
#include <optional>
#include <vector>

inline mng::Adjacency A(int colour, mng::Vertex tail, mng::Vertex head) {
    return {mng::AdjKind::arc, colour, tail, head};
}

inline mng::Adjacency E(int colour, mng::Vertex u, mng::Vertex v) {
    return {mng::AdjKind::edge, colour, u, v};
}

inline std::vector<mng::Vertex> sorted(std::vector<mng::Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Reference strong-connectivity check: transitive closure by repeated
// relaxation.  Quadratic and obviously correct, which is the point.
inline bool closure_strongly_connected(int n,
                                       const std::vector<std::pair<int, int>>& arcs) {
    if (n <= 1) return true;
    std::vector<std::vector<char>> reach(static_cast<size_t>(n),
                                         std::vector<char>(static_cast<size_t>(n), 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    for (auto [u, v] : arcs) reach[u][v] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (reach[u][v])
                    for (int w = 0; w < n; ++w)
                        if (reach[v][w] && !reach[u][w]) {
                            reach[u][w] = 1;
                            changed = true;
                        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!reach[u][v]) return false;
    return true;
}

// Reference connected components of the underlying graph with one colour
// class removed, by union-find.
inline std::vector<int> uf_components_without(const mng::MixedGraph& g,
                                              mng::AdjKind kind, int colour) {
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const mng::Adjacency& a : g.adjacencies()) {
        if (a.kind == kind && a.colour == colour) continue;
        parent[static_cast<size_t>(find(a.u))] = find(a.v);
    }
    std::vector<int> label(parent.size(), -1);
    int next = 0;
    for (size_t v = 0; v < parent.size(); ++v) {
        int root = find(static_cast<int>(v));
        if (label[static_cast<size_t>(root)] < 0) label[static_cast<size_t>(root)] = next++;
        label[v] = label[static_cast<size_t>(root)];
    }
    return label;
}

// Reference image choice for one extension row, straight from the rule: the
// lowest target vertex adjacent to both anchors with the demanded types, and
// failing that the lowest whose unmet demands all fall on its own anchor.
// `type` is 0/1 for arc-into-z / arc-out-of-z, or colour-1 for edges.
inline std::optional<int> reference_row_image(const mng::MixedGraph& target,
                                              bool oriented, int a1, int a2,
                                              int t1, int t2) {
    auto realised = [&](int w, int anchor, int t) {
        auto ty = target.type(anchor, w);
        if (!ty) return false;
        if (oriented)
            return ty->kind == mng::AdjKind::arc && (t == 0 ? ty->forward : !ty->forward);
        return ty->kind == mng::AdjKind::edge && ty->colour == t + 1;
    };
    for (int w = 0; w < target.vertex_count(); ++w)
        if (w != a1 && w != a2 && realised(w, a1, t1) && realised(w, a2, t2))
            return w;
    for (int w = 0; w < target.vertex_count(); ++w)
        if ((w == a1 || realised(w, a1, t1)) && (w == a2 || realised(w, a2, t2)))
            return w;
    return std::nullopt;
}

#endif

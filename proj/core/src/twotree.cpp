#include <mng/twotree.hpp>

#include <mng/families.hpp>
#include <mng/rng.hpp>

#include <algorithm>
#include <numeric>

namespace mng {

PeelOrder recognize_2tree(const MixedGraph& g) {
    int n = g.vertex_count();
    if (n < 2)
        throw Not2TreeError("recognize_2tree: need at least two vertices");

    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<int> degree(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        degree[static_cast<size_t>(v)] =
            static_cast<int>(g.neighbours(v).size());

    PeelOrder order;
    int remaining = n;
    while (remaining > 2) {
        Vertex pick = -1;
        Vertex a = -1, b = -1;
        for (Vertex v = 0; v < n && pick == -1; ++v) {
            if (!alive[static_cast<size_t>(v)] ||
                degree[static_cast<size_t>(v)] != 2)
                continue;
            Vertex x = -1, y = -1;
            for (Vertex w : g.neighbours(v)) {
                if (!alive[static_cast<size_t>(w)]) continue;
                (x == -1 ? x : y) = w;
            }
            if (g.adjacent(x, y)) {
                pick = v;
                a = x;
                b = y;
            }
        }
        if (pick == -1)
            throw Not2TreeError(
                "recognize_2tree: stuck with " + std::to_string(remaining) +
                " vertices left and no degree-2 vertex on an edge");
        order.steps.push_back({pick, std::min(a, b), std::max(a, b)});
        alive[static_cast<size_t>(pick)] = 0;
        --degree[static_cast<size_t>(a)];
        --degree[static_cast<size_t>(b)];
        --remaining;
    }

    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) last.push_back(v);
    if (!g.adjacent(last[0], last[1]))
        throw Not2TreeError(
            "recognize_2tree: stuck with 2 vertices left that are not "
            "adjacent");
    order.base_u = last[0];
    order.base_v = last[1];
    return order;
}

namespace {

// Whether the target realises the required relation between a candidate
// image w and an anchor image a: for oriented tables type 0 demands the arc
// a -> w (the peeled vertex sits downstream of its neighbour) and type 1
// the arc w -> a; for edge-coloured tables the edge wa must carry the
// colour type + 1.
bool realised(const MixedGraph& target, TwoTreeKind kind, Vertex w, Vertex a,
              int type) {
    auto t = target.type(a, w);
    if (!t) return false;
    if (kind == TwoTreeKind::oriented)
        return t->kind == AdjKind::arc && (type == 0 ? t->forward : !t->forward);
    return t->kind == AdjKind::edge && t->colour == type + 1;
}

ExtensionTable derive_table(TwoTreeKind kind, MixedGraph target) {
    ExtensionTable table{kind, std::move(target), {}};
    for (int t1 = 0; t1 < 2; ++t1)
        for (int t2 = 0; t2 < 2; ++t2)
            for (int anchor2 = 0; anchor2 < 2; ++anchor2) {
                Vertex a1 = 0, a2 = anchor2;
                int found = -1;
                // Prefer images realising both adjacencies in the target;
                // fall back to images that coincide with an anchor, where
                // the constraint is waived.  Lexicographically least in
                // both classes.
                for (Vertex w = 0; w < table.target.vertex_count(); ++w)
                    if (w != a1 && w != a2 &&
                        realised(table.target, kind, w, a1, t1) &&
                        realised(table.target, kind, w, a2, t2)) {
                        found = w;
                        break;
                    }
                if (found == -1)
                    for (Vertex w = 0; w < table.target.vertex_count(); ++w)
                        if ((w == a1 || realised(table.target, kind, w, a1, t1)) &&
                            (w == a2 || realised(table.target, kind, w, a2, t2))) {
                            found = w;
                            break;
                        }
                if (found == -1)
                    throw Error("extension table: no valid image for row (" +
                                std::to_string(t1) + ", " + std::to_string(t2) +
                                ", anchor " + std::to_string(anchor2) + ")");
                table.image[static_cast<size_t>((t1 << 2) | (t2 << 1) |
                                                anchor2)] = found;
            }
    return table;
}

MixedGraph pentagon_target() {
    // K5 whose colour-1 edges form the cycle 0-1-2-3-4-0.
    std::vector<Adjacency> edges;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) {
            int d = v - u;
            edges.push_back({AdjKind::edge, (d == 1 || d == 4) ? 1 : 2, u, v});
        }
    return build(0, 2, 5, edges);
}

}  // namespace

const ExtensionTable& derive_oriented_table() {
    static const ExtensionTable table =
        derive_table(TwoTreeKind::oriented, directed_cycle(3));
    return table;
}

const ExtensionTable& derive_2ec_table() {
    static const ExtensionTable table =
        derive_table(TwoTreeKind::two_edge_coloured, pentagon_target());
    return table;
}

namespace {

// Shared replay driver.  `normalise` must bring the anchor images to
// (0, {0,1}) by permuting all assigned images, returning the image of the
// second anchor; `type_of` reads the table index of the adjacency between
// the peeled vertex and a neighbour.
struct Replay {
    const MixedGraph& g;
    const ExtensionTable& table;
    std::vector<Vertex> image;
    std::vector<Vertex> assigned;

    explicit Replay(const MixedGraph& graph, const ExtensionTable& t)
        : g(graph), table(t),
          image(static_cast<size_t>(graph.vertex_count()), -1) {}

    void set(Vertex v, Vertex to) {
        image[static_cast<size_t>(v)] = to;
        assigned.push_back(v);
    }

    void permute(const std::array<int, 5>& sigma) {
        for (Vertex v : assigned)
            image[static_cast<size_t>(v)] =
                sigma[static_cast<size_t>(image[static_cast<size_t>(v)])];
    }
};

int arc_type_towards(const MixedGraph& g, Vertex z, Vertex neighbour) {
    // 0 when the neighbour's arc enters z.
    return g.type(neighbour, z)->forward ? 0 : 1;
}

std::array<int, 5> rotation3(int shift) {
    std::array<int, 5> s{};
    for (int i = 0; i < 3; ++i) s[static_cast<size_t>(i)] = (i + shift) % 3;
    return s;
}

}  // namespace

VertexMap colour_oriented_2tree(const MixedGraph& g) {
    for (const Adjacency& a : g.adjacencies())
        if (a.kind != AdjKind::arc || a.colour != 1)
            throw GraphError(
                "colour_oriented_2tree: graph is not purely oriented");

    PeelOrder peel = recognize_2tree(g);
    const ExtensionTable& table = derive_oriented_table();
    Replay replay(g, table);

    // Base edge: search the target for a pair carrying the same type.
    {
        auto base = *g.type(peel.base_u, peel.base_v);
        bool placed = false;
        for (Vertex a = 0; a < 3 && !placed; ++a)
            for (Vertex b = 0; b < 3 && !placed; ++b) {
                if (a == b) continue;
                auto t = table.target.type(a, b);
                if (t && *t == base) {
                    replay.set(peel.base_u, a);
                    replay.set(peel.base_v, b);
                    placed = true;
                }
            }
        if (!placed)
            throw Error("colour_oriented_2tree: no base image");  // unreachable
    }

    for (auto it = peel.steps.rbegin(); it != peel.steps.rend(); ++it) {
        // The anchor mapped to vertex 0 is the tail of the arc joining the
        // two neighbours.
        Vertex z1 = it->n1, z2 = it->n2;
        if (!g.type(z1, z2)->forward) std::swap(z1, z2);

        int shift = (3 - replay.image[static_cast<size_t>(z1)]) % 3;
        replay.permute(rotation3(shift));
        Vertex a2 = replay.image[static_cast<size_t>(z2)];

        int t1 = arc_type_towards(g, it->peeled, z1);
        int t2 = arc_type_towards(g, it->peeled, z2);
        replay.set(it->peeled, table.row(t1, t2, a2 == 1 ? 1 : 0));
    }

    VertexMap f;
    f.source_size = g.vertex_count();
    f.target_size = 3;
    f.image = std::move(replay.image);
    return f;
}

namespace {

struct PentagonSymmetry {
    // Permutations of the target preserving the two colour classes, and
    // permutations exchanging them.
    std::vector<std::array<int, 5>> preserving;
    std::vector<std::array<int, 5>> swapping;
};

const PentagonSymmetry& pentagon_symmetry() {
    static const PentagonSymmetry sym = [] {
        PentagonSymmetry s;
        const MixedGraph& target = derive_2ec_table().target;
        std::array<int, 5> perm{0, 1, 2, 3, 4};
        do {
            bool preserves = true, swaps = true;
            for (Vertex u = 0; u < 5 && (preserves || swaps); ++u)
                for (Vertex v = u + 1; v < 5; ++v) {
                    int c = target.type(u, v)->colour;
                    int image_c = target
                                      .type(perm[static_cast<size_t>(u)],
                                            perm[static_cast<size_t>(v)])
                                      ->colour;
                    if (image_c != c) preserves = false;
                    if (image_c != 3 - c) swaps = false;
                }
            if (preserves) s.preserving.push_back(perm);
            if (swaps) s.swapping.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return s;
    }();
    return sym;
}

const std::array<int, 5>* find_perm(const std::vector<std::array<int, 5>>& set,
                                    Vertex a, Vertex to_a, Vertex b,
                                    Vertex to_b) {
    for (const auto& p : set)
        if (p[static_cast<size_t>(a)] == to_a &&
            (b == -1 || p[static_cast<size_t>(b)] == to_b))
            return &p;
    return nullptr;
}

}  // namespace

VertexMap colour_2ec_2tree(const MixedGraph& g) {
    for (const Adjacency& a : g.adjacencies())
        if (a.kind != AdjKind::edge || a.colour < 1 || a.colour > 2)
            throw GraphError(
                "colour_2ec_2tree: graph is not two-edge-coloured");

    PeelOrder peel = recognize_2tree(g);
    const ExtensionTable& table = derive_2ec_table();
    const PentagonSymmetry& sym = pentagon_symmetry();
    Replay replay(g, table);

    // While set, assigned images represent a colour-swapped reading of the
    // source; edge colours are flipped before every table lookup and one
    // swapping permutation is applied at the end.
    bool swapped = false;
    auto effective = [&](Vertex u, Vertex v) {
        int c = g.type(u, v)->colour;
        return swapped ? 3 - c : c;
    };

    {
        auto base = *g.type(peel.base_u, peel.base_v);
        bool placed = false;
        for (Vertex a = 0; a < 5 && !placed; ++a)
            for (Vertex b = 0; b < 5 && !placed; ++b) {
                if (a == b) continue;
                auto t = table.target.type(a, b);
                if (t && *t == base) {
                    replay.set(peel.base_u, a);
                    replay.set(peel.base_v, b);
                    placed = true;
                }
            }
        if (!placed) throw Error("colour_2ec_2tree: no base image");
    }

    for (auto it = peel.steps.rbegin(); it != peel.steps.rend(); ++it) {
        Vertex z1 = it->n1, z2 = it->n2;
        Vertex a1 = replay.image[static_cast<size_t>(z1)];
        Vertex a2 = replay.image[static_cast<size_t>(z2)];

        auto apply = [&](const std::array<int, 5>* p) {
            if (!p) throw Error("colour_2ec_2tree: missing symmetry");
            replay.permute(*p);
        };
        if (a1 == a2) {
            apply(find_perm(sym.preserving, a1, 0, -1, -1));
        } else if (table.target.type(a1, a2)->colour == 1) {
            apply(find_perm(sym.preserving, a1, 0, a2, 1));
        } else {
            // A colour-class exchange carries the colour-2 anchor pair onto
            // the colour-1 pair (0, 1).
            apply(find_perm(sym.swapping, a1, 0, a2, 1));
            swapped = !swapped;
        }
        Vertex na2 = replay.image[static_cast<size_t>(z2)];

        int t1 = effective(it->peeled, z1) - 1;
        int t2 = effective(it->peeled, z2) - 1;
        replay.set(it->peeled, table.row(t1, t2, na2 == 1 ? 1 : 0));
    }

    if (swapped) replay.permute(sym.swapping.front());

    VertexMap f;
    f.source_size = g.vertex_count();
    f.target_size = 5;
    f.image = std::move(replay.image);
    return f;
}

MixedGraph random_2tree(int vertex_count, TwoTreeKind kind,
                        std::uint64_t seed) {
    if (vertex_count < 3)
        throw GraphError("random_2tree: need at least three vertices");
    Rng rng(seed);
    std::vector<Adjacency> adj;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto attach = [&](Vertex u, Vertex v) {
        if (kind == TwoTreeKind::oriented) {
            bool forward = rng.raw() & 1;
            adj.push_back({AdjKind::arc, 1, forward ? u : v, forward ? v : u});
        } else {
            adj.push_back(
                {AdjKind::edge, 1 + static_cast<int>(rng.raw() & 1), u, v});
        }
        edges.push_back({u, v});
    };

    attach(0, 1);
    attach(0, 2);
    attach(1, 2);
    for (Vertex w = 3; w < vertex_count; ++w) {
        auto [u, v] =
            edges[static_cast<size_t>(rng.below(edges.size()))];
        attach(u, w);
        attach(v, w);
    }

    if (kind == TwoTreeKind::oriented)
        return build(1, 0, vertex_count, adj);
    return build(0, 2, vertex_count, adj);
}

}  // namespace mng

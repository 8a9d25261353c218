#include <mng/families.hpp>

#include <mng/rng.hpp>

namespace mng {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw GraphError(message);
}

}  // namespace

MixedGraph cayley_oriented_clique(int n) {
    require(n >= 5 && n % 2 == 1,
            "cayley_oriented_clique: order must be odd and at least 5");
    auto in_set = [n](int d) {
        return d == 2 || d == n - 1 || d % 4 == 0;
    };
    std::vector<Adjacency> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            int d = ((u - v) % n + n) % n;
            if (in_set(d)) arcs.push_back({AdjKind::arc, 1, u, v});
        }
    return build(1, 0, n, arcs);
}

MixedGraph cayley_2ec_clique(int n) {
    require(n >= 5, "cayley_2ec_clique: order must be at least 5");
    std::vector<Adjacency> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = v - u, rd = n - d;
            int colour = (d == 1 || rd == 1) ? 1 : 2;
            edges.push_back({AdjKind::edge, colour, u, v});
        }
    return build(0, 2, n, edges);
}

MixedGraph double_cycle_2ec_clique(int n) {
    require(n >= 3, "double_cycle_2ec_clique: side size must be at least 3");
    std::vector<Adjacency> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({AdjKind::edge, 1, i, (i + 1) % n});
        edges.push_back({AdjKind::edge, 1, n + i, n + (i + 1) % n});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            edges.push_back({AdjKind::edge, i == j ? 1 : 2, i, n + j});
    return build(0, 2, 2 * n, edges);
}

MixedGraph double_cycle_oriented_clique(int n) {
    require(n >= 3,
            "double_cycle_oriented_clique: side size must be at least 3");
    std::vector<Adjacency> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.push_back({AdjKind::arc, 1, i, (i + 1) % n});
        arcs.push_back({AdjKind::arc, 1, n + (i + 1) % n, n + i});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i <= j)
                arcs.push_back({AdjKind::arc, 1, i, n + j});
            else
                arcs.push_back({AdjKind::arc, 1, n + j, i});
        }
    return build(1, 0, 2 * n, arcs);
}

MixedGraph transitive_tournament(int k) {
    require(k >= 1, "transitive_tournament: order must be positive");
    std::vector<Adjacency> arcs;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            arcs.push_back({AdjKind::arc, 1, i, j});
    return build(1, 0, k, arcs);
}

MixedGraph directed_cycle(int k) {
    require(k >= 3, "directed_cycle: order must be at least 3");
    std::vector<Adjacency> arcs;
    for (int i = 0; i < k; ++i)
        arcs.push_back({AdjKind::arc, 1, i, (i + 1) % k});
    return build(1, 0, k, arcs);
}

MixedGraph tournament_from_bits(int k, std::uint64_t bits) {
    require(k >= 1 && k <= 11, "tournament_from_bits: order out of range");
    require(bits >> (k * (k - 1) / 2) == 0,
            "tournament_from_bits: bits beyond the pair count");
    std::vector<Adjacency> arcs;
    int bit = 0;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v, ++bit) {
            bool forward = (bits >> bit) & 1;
            arcs.push_back({AdjKind::arc, 1, forward ? u : v, forward ? v : u});
        }
    return build(1, 0, k, arcs);
}

MixedGraph two_edge_coloured_complete_from_bits(int k, std::uint64_t bits) {
    require(k >= 1 && k <= 11,
            "two_edge_coloured_complete_from_bits: order out of range");
    require(bits >> (k * (k - 1) / 2) == 0,
            "two_edge_coloured_complete_from_bits: bits beyond the pair count");
    std::vector<Adjacency> edges;
    int bit = 0;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v, ++bit)
            edges.push_back({AdjKind::edge, ((bits >> bit) & 1) ? 2 : 1, u, v});
    return build(0, 2, k, edges);
}

namespace {

std::vector<MixedGraph> enumerate_complete(int k, bool oriented) {
    if (k < 1 || k > 6)
        throw GraphError("enumeration: order must be between 1 and 6");
    int pairs = k * (k - 1) / 2;
    std::vector<MixedGraph> out;
    out.reserve(static_cast<size_t>(1) << pairs);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
        out.push_back(oriented ? tournament_from_bits(k, bits)
                               : two_edge_coloured_complete_from_bits(k, bits));
    return out;
}

}  // namespace

std::vector<MixedGraph> enumerate_tournaments(int k) {
    return enumerate_complete(k, true);
}

std::vector<MixedGraph> enumerate_2ec_complete(int k) {
    return enumerate_complete(k, false);
}

MixedGraph random_mixed(int arc_colours, int edge_colours, int vertex_count,
                        double p, std::uint64_t seed) {
    require(vertex_count >= 1, "random_mixed: vertex count must be positive");
    require(arc_colours >= 0 && edge_colours >= 0 &&
                arc_colours + edge_colours >= 1,
            "random_mixed: need at least one colour");
    require(p >= 0.0 && p <= 1.0, "random_mixed: probability out of range");
    Rng rng(seed);
    int outcomes = 2 * arc_colours + edge_colours;
    std::vector<Adjacency> adj;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) {
            if (!rng.chance(p)) continue;
            int pick = static_cast<int>(
                rng.below(static_cast<std::uint64_t>(outcomes)));
            if (pick < arc_colours)
                adj.push_back({AdjKind::arc, pick + 1, u, v});
            else if (pick < 2 * arc_colours)
                adj.push_back({AdjKind::arc, pick - arc_colours + 1, v, u});
            else
                adj.push_back({AdjKind::edge, pick - 2 * arc_colours + 1, u, v});
        }
    return build(arc_colours, edge_colours, vertex_count, adj);
}

}  // namespace mng

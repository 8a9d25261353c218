#include <mng/decision.hpp>

#include <mng/convexity.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace mng {

namespace {

// Connected components of the underlying graph, optionally ignoring one
// colour class of arcs or edges.  skip_kind pairs with skip_colour; pass
// colour 0 to keep everything.
std::vector<int> components_without(const MixedGraph& g, AdjKind skip_kind,
                                    int skip_colour) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (comp[static_cast<size_t>(start)] != -1) continue;
        comp[static_cast<size_t>(start)] = count;
        stack.push_back(start);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u)) {
                auto t = *g.type(u, w);
                if (skip_colour != 0 && t.kind == skip_kind &&
                    t.colour == skip_colour)
                    continue;
                if (comp[static_cast<size_t>(w)] == -1) {
                    comp[static_cast<size_t>(w)] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

int component_count(const std::vector<int>& comp) {
    int c = 0;
    for (int x : comp) c = std::max(c, x + 1);
    return c;
}

std::vector<Vertex> vertices_in_component(const std::vector<int>& comp,
                                          int which) {
    std::vector<Vertex> out;
    for (size_t v = 0; v < comp.size(); ++v)
        if (comp[v] == which) out.push_back(static_cast<Vertex>(v));
    return out;
}

// Strongly connected components in reverse topological order (Tarjan).
std::vector<int> strong_components(int n,
                                   const std::vector<std::vector<int>>& out) {
    std::vector<int> scc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0), num(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    int counter = 0, comp = 0;

    std::function<void(int)> visit = [&](int u) {
        num[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = counter++;
        stack.push_back(u);
        on_stack[static_cast<size_t>(u)] = 1;
        for (int w : out[static_cast<size_t>(u)]) {
            if (num[static_cast<size_t>(w)] == -1) {
                visit(w);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
            } else if (on_stack[static_cast<size_t>(w)]) {
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], num[static_cast<size_t>(w)]);
            }
        }
        if (low[static_cast<size_t>(u)] == num[static_cast<size_t>(u)]) {
            for (;;) {
                int w = stack.back();
                stack.pop_back();
                on_stack[static_cast<size_t>(w)] = 0;
                scc[static_cast<size_t>(w)] = comp;
                if (w == u) break;
            }
            ++comp;
        }
    };
    for (int u = 0; u < n; ++u)
        if (num[static_cast<size_t>(u)] == -1) visit(u);
    return scc;
}

}  // namespace

bool CondensationDigraph::strongly_connected() const {
    int n = static_cast<int>(components.size());
    if (n <= 1) return true;
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (auto [a, b] : arcs) out[static_cast<size_t>(a)].push_back(b);
    std::vector<int> scc = strong_components(n, out);
    return component_count(scc) == 1;
}

CondensationDigraph condensation(const MixedGraph& g, int arc_colour) {
    if (arc_colour < 1 || arc_colour > g.arc_colours())
        throw GraphError("condensation: arc colour " +
                         std::to_string(arc_colour) + " out of range");
    CondensationDigraph h;
    h.component_of = components_without(g, AdjKind::arc, arc_colour);
    int count = component_count(h.component_of);
    h.components.resize(static_cast<size_t>(count));
    for (size_t v = 0; v < h.component_of.size(); ++v)
        h.components[static_cast<size_t>(h.component_of[v])].push_back(
            static_cast<Vertex>(v));

    std::set<std::pair<int, int>> arcs;
    for (const Adjacency& a : g.adjacencies()) {
        if (a.kind != AdjKind::arc || a.colour != arc_colour) continue;
        int cu = h.component_of[static_cast<size_t>(a.u)];
        int cv = h.component_of[static_cast<size_t>(a.v)];
        if (cu != cv) arcs.insert({cu, cv});
    }
    h.arcs.assign(arcs.begin(), arcs.end());
    return h;
}

TwoColourCertificate decide_chi_s_two(const MixedGraph& g) {
    TwoColourCertificate cert;
    int n = g.vertex_count();

    if (n == 1) {
        cert.answer = false;
        cert.note = "single vertex: the only colouring uses one block";
        return cert;
    }

    auto split = [&](const std::vector<Vertex>& y) {
        std::vector<char> in_y(static_cast<size_t>(n), 0);
        for (Vertex v : y) in_y[static_cast<size_t>(v)] = 1;
        cert.answer = true;
        cert.part_x.clear();
        cert.part_y = y;
        for (Vertex v = 0; v < n; ++v)
            if (!in_y[static_cast<size_t>(v)]) cert.part_x.push_back(v);
    };

    // Disconnected underlying graph: one component against the rest.
    std::vector<int> comp = components_without(g, AdjKind::edge, 0);
    if (component_count(comp) > 1) {
        split(vertices_in_component(comp, comp[0]));
        std::swap(cert.part_x, cert.part_y);  // component first reads nicer
        cert.note = "underlying graph disconnected";
        return cert;
    }

    if (n == 2) {
        auto t = g.type(0, 1);
        bool arc_into_0 = t && t->kind == AdjKind::arc && !t->forward;
        split({arc_into_0 ? 0 : 1});
        cert.note = "two vertices always split";
        return cert;
    }

    // One edge colour class forming a cut: the two sides only meet in that
    // colour.
    for (int c = 1; c <= g.edge_colours(); ++c) {
        std::vector<int> without = components_without(g, AdjKind::edge, c);
        bool connected = component_count(without) == 1;
        cert.edge_facts.push_back({c, connected});
        if (!connected) {
            split(vertices_in_component(without, without[0]));
            std::swap(cert.part_x, cert.part_y);
            return cert;
        }
    }

    // One arc colour class forming a one-way cut: components of the graph
    // without that colour can only meet in arcs of the colour, so a
    // successor-closed set of components works whenever the projected
    // digraph is not strongly connected.
    for (int c = 1; c <= g.arc_colours(); ++c) {
        CondensationDigraph h = condensation(g, c);
        int t = static_cast<int>(h.components.size());
        bool strong = h.strongly_connected();
        cert.arc_facts.push_back({c, strong});
        if (strong) continue;

        std::vector<std::vector<int>> out(static_cast<size_t>(t));
        for (auto [a, b] : h.arcs) out[static_cast<size_t>(a)].push_back(b);
        std::vector<int> scc = strong_components(t, out);
        // Tarjan emits components in reverse topological order, so the
        // first one has no arc leaving it.
        std::vector<Vertex> sink;
        for (int i = 0; i < t; ++i)
            if (scc[static_cast<size_t>(i)] == 0)
                for (Vertex v : h.components[static_cast<size_t>(i)])
                    sink.push_back(v);
        std::sort(sink.begin(), sink.end());
        split(sink);
        return cert;
    }

    cert.answer = false;
    return cert;
}

bool is_clique(const MixedGraph& g) {
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            bool ok = false;
            for (Vertex z = 0; z < n && !ok; ++z)
                if (between(g, u, v, z)) ok = true;
            if (!ok) return false;
        }
    return true;
}

bool is_simple_clique(const MixedGraph& g) {
    int n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            HullTrace trace = convex_hull(g, {u, v});
            if (static_cast<int>(trace.final.size()) != n) return false;
        }
    return true;
}

CompleteChiS complete_chi_s(const MixedGraph& g) {
    if (!is_complete(g))
        throw GraphError("complete_chi_s: graph is not complete");

    MixedGraph h = g;
    VertexMap acc = VertexMap::identity(g.vertex_count());

    for (;;) {
        int n = h.vertex_count();
        if (n == 1) return {1, std::move(acc)};

        TwoColourCertificate two = decide_chi_s_two(h);
        if (two.answer) {
            VertexMap split;
            split.source_size = n;
            split.target_size = 2;
            split.image.resize(static_cast<size_t>(n));
            for (Vertex v : two.part_x) split.image[static_cast<size_t>(v)] = 0;
            for (Vertex v : two.part_y) split.image[static_cast<size_t>(v)] = 1;
            return {2, compose(acc, split)};
        }

        // Find a pair whose hull is proper; identifying the hull of such a
        // pair keeps the graph complete and preserves the value.
        bool collapsed = false;
        for (Vertex u = 0; u < n && !collapsed; ++u)
            for (Vertex v = u + 1; v < n && !collapsed; ++v) {
                HullTrace trace = convex_hull(h, {u, v});
                if (static_cast<int>(trace.final.size()) == n) continue;
                auto [quotient, qmap] = identify(h, trace.final);
                acc = compose(acc, qmap);
                h = std::move(quotient);
                collapsed = true;
            }
        if (!collapsed) return {h.vertex_count(), std::move(acc)};  // simple clique
    }
}

}  // namespace mng

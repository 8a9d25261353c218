#include <mng/graph.hpp>

#include <algorithm>
#include <set>

namespace mng {

namespace {

std::string describe(const Adjacency& a) {
    std::string s = a.kind == AdjKind::arc ? "arc" : "edge";
    s += " colour " + std::to_string(a.colour) + " on (" +
         std::to_string(a.u) + ", " + std::to_string(a.v) + ")";
    return s;
}

}  // namespace

VertexMap VertexMap::identity(int size) {
    VertexMap f;
    f.source_size = size;
    f.target_size = size;
    f.image.resize(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) f.image[static_cast<size_t>(i)] = i;
    return f;
}

bool VertexMap::well_formed() const {
    if (source_size < 0 || target_size < 0) return false;
    if (image.size() != static_cast<size_t>(source_size)) return false;
    for (Vertex t : image)
        if (t < 0 || t >= target_size) return false;
    return true;
}

bool VertexMap::surjective() const {
    std::vector<char> hit(static_cast<size_t>(target_size), 0);
    for (Vertex t : image) hit[static_cast<size_t>(t)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool VertexMap::constant() const {
    for (Vertex t : image)
        if (t != image[0]) return false;
    return true;
}

VertexMap compose(const VertexMap& phi, const VertexMap& beta) {
    if (phi.target_size != beta.source_size)
        throw GraphError("compose: target size " +
                         std::to_string(phi.target_size) +
                         " does not match source size " +
                         std::to_string(beta.source_size));
    VertexMap out;
    out.source_size = phi.source_size;
    out.target_size = beta.target_size;
    out.image.reserve(phi.image.size());
    for (Vertex t : phi.image) out.image.push_back(beta(t));
    return out;
}

std::optional<AdjacencyType> MixedGraph::type(Vertex u, Vertex v) const {
    const Cell& c = cell(u, v);
    switch (c.rel) {
        case Rel::none: return std::nullopt;
        case Rel::edge: return AdjacencyType{AdjKind::edge, c.colour, true};
        case Rel::arc_out: return AdjacencyType{AdjKind::arc, c.colour, true};
        case Rel::arc_in: return AdjacencyType{AdjKind::arc, c.colour, false};
    }
    return std::nullopt;
}

std::vector<Adjacency> MixedGraph::adjacencies() const {
    std::vector<Adjacency> out;
    out.reserve(static_cast<size_t>(adjacency_count()));
    for (Vertex u = 0; u < v_; ++u)
        for (Vertex v = u + 1; v < v_; ++v) {
            const Cell& c = cell(u, v);
            switch (c.rel) {
                case Rel::none: break;
                case Rel::edge:
                    out.push_back({AdjKind::edge, c.colour, u, v});
                    break;
                case Rel::arc_out:
                    out.push_back({AdjKind::arc, c.colour, u, v});
                    break;
                case Rel::arc_in:
                    out.push_back({AdjKind::arc, c.colour, v, u});
                    break;
            }
        }
    std::stable_sort(out.begin(), out.end(),
                     [](const Adjacency& a, const Adjacency& b) {
                         auto key = [](const Adjacency& x) {
                             return std::tuple(x.kind == AdjKind::edge ? 1 : 0,
                                               x.colour, std::min(x.u, x.v),
                                               std::max(x.u, x.v));
                         };
                         return key(a) < key(b);
                     });
    return out;
}

const std::string& MixedGraph::label(Vertex v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<size_t>(v)];
}

MixedGraph MixedGraph::widened(int arc_colours, int edge_colours) const {
    if (arc_colours < m_ || edge_colours < n_)
        throw GraphError("widened: declared bounds may only grow");
    MixedGraph g = *this;
    g.m_ = arc_colours;
    g.n_ = edge_colours;
    return g;
}

MixedGraph build(int arc_colours, int edge_colours, int vertex_count,
                 const std::vector<Adjacency>& adjacencies,
                 std::vector<std::string> labels) {
    if (vertex_count <= 0)
        throw GraphError("build: vertex count must be positive");
    if (arc_colours < 0 || edge_colours < 0 || arc_colours + edge_colours == 0)
        throw GraphError("build: need non-negative colour bounds with m + n >= 1");
    if (!labels.empty() && labels.size() != static_cast<size_t>(vertex_count))
        throw GraphError("build: label list must cover every vertex");

    MixedGraph g(arc_colours, edge_colours, vertex_count);
    g.cells_.resize(static_cast<size_t>(vertex_count) *
                    static_cast<size_t>(vertex_count));
    g.adj_.resize(static_cast<size_t>(vertex_count));
    g.labels_ = std::move(labels);

    for (const Adjacency& a : adjacencies) {
        if (a.u < 0 || a.u >= vertex_count || a.v < 0 || a.v >= vertex_count)
            throw GraphError("build: vertex id out of range in " + describe(a));
        if (a.u == a.v)
            throw GraphError("build: loop not allowed in " + describe(a));
        int bound = a.kind == AdjKind::arc ? arc_colours : edge_colours;
        if (a.colour < 1 || a.colour > bound)
            throw GraphError("build: colour out of range in " + describe(a));
        if (g.cell(a.u, a.v).rel != MixedGraph::Rel::none)
            throw GraphError("build: duplicate adjacency in " + describe(a));
        if (a.kind == AdjKind::edge) {
            g.cell(a.u, a.v) = {MixedGraph::Rel::edge, a.colour};
            g.cell(a.v, a.u) = {MixedGraph::Rel::edge, a.colour};
            ++g.edge_count_;
        } else {
            g.cell(a.u, a.v) = {MixedGraph::Rel::arc_out, a.colour};
            g.cell(a.v, a.u) = {MixedGraph::Rel::arc_in, a.colour};
            ++g.arc_count_;
        }
        g.adj_[static_cast<size_t>(a.u)].push_back(a.v);
        g.adj_[static_cast<size_t>(a.v)].push_back(a.u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

MixedGraph underlying(const MixedGraph& g) {
    std::vector<Adjacency> edges;
    edges.reserve(static_cast<size_t>(g.adjacency_count()));
    for (const Adjacency& a : g.adjacencies())
        edges.push_back({AdjKind::edge, 1, std::min(a.u, a.v), std::max(a.u, a.v)});
    return build(0, 1, g.vertex_count(), edges);
}

bool same_type(const MixedGraph& g, Vertex u1, Vertex v1, Vertex u2, Vertex v2) {
    auto t1 = g.type(u1, v1);
    auto t2 = g.type(u2, v2);
    if (!t1)
        throw GraphError("same_type: pair (" + std::to_string(u1) + ", " +
                         std::to_string(v1) + ") not adjacent");
    if (!t2)
        throw GraphError("same_type: pair (" + std::to_string(u2) + ", " +
                         std::to_string(v2) + ") not adjacent");
    return *t1 == *t2;
}

std::pair<MixedGraph, VertexMap> identify(const MixedGraph& g,
                                          const std::vector<Vertex>& s) {
    if (s.empty()) throw GraphError("identify: set must be non-empty");
    int vc = g.vertex_count();
    std::vector<char> in_s(static_cast<size_t>(vc), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= vc)
            throw GraphError("identify: vertex id " + std::to_string(v) +
                             " out of range");
        in_s[static_cast<size_t>(v)] = 1;
    }
    std::vector<Vertex> members;
    for (Vertex v = 0; v < vc; ++v)
        if (in_s[static_cast<size_t>(v)]) members.push_back(v);

    // Exterior consistency: each outside vertex must see a single adjacency
    // type from the members it is adjacent to.
    for (Vertex w = 0; w < vc; ++w) {
        if (in_s[static_cast<size_t>(w)]) continue;
        std::optional<AdjacencyType> seen;
        Vertex seen_member = -1;
        for (Vertex m : members) {
            auto t = g.type(w, m);
            if (!t) continue;
            if (!seen) {
                seen = t;
                seen_member = m;
            } else if (*t != *seen) {
                throw IdentifyError(
                    "identify: members " + std::to_string(seen_member) +
                        " and " + std::to_string(m) +
                        " disagree towards vertex " + std::to_string(w),
                    seen_member, m, w);
            }
        }
    }

    Vertex rep = members.front();
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < vc; ++v)
        if (v == rep || !in_s[static_cast<size_t>(v)]) kept.push_back(v);

    std::vector<Vertex> new_id(static_cast<size_t>(vc), -1);
    for (size_t i = 0; i < kept.size(); ++i)
        new_id[static_cast<size_t>(kept[i])] = static_cast<Vertex>(i);

    VertexMap q;
    q.source_size = vc;
    q.target_size = static_cast<int>(kept.size());
    q.image.resize(static_cast<size_t>(vc));
    for (Vertex v = 0; v < vc; ++v)
        q.image[static_cast<size_t>(v)] =
            new_id[static_cast<size_t>(in_s[static_cast<size_t>(v)] ? rep : v)];

    std::set<std::pair<Vertex, Vertex>> emitted;
    std::vector<Adjacency> quotient_adj;
    for (const Adjacency& a : g.adjacencies()) {
        bool u_in = in_s[static_cast<size_t>(a.u)] != 0;
        bool v_in = in_s[static_cast<size_t>(a.v)] != 0;
        if (u_in && v_in) continue;  // interior adjacency disappears
        Vertex nu = q(a.u), nv = q(a.v);
        auto key = std::minmax(nu, nv);
        if (!emitted.insert({key.first, key.second}).second) continue;
        quotient_adj.push_back({a.kind, a.colour, nu, nv});
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(kept.size());
        for (Vertex v : kept) labels.push_back(g.label(v));
    }
    return {build(g.arc_colours(), g.edge_colours(),
                  static_cast<int>(kept.size()), quotient_adj,
                  std::move(labels)),
            q};
}

bool is_complete(const MixedGraph& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

}  // namespace mng

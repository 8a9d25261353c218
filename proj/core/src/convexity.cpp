#include <mng/convexity.hpp>

#include <algorithm>

namespace mng {

bool agree(const MixedGraph& g, Vertex u, Vertex w, Vertex v) {
    auto tu = g.type(v, u);
    auto tw = g.type(v, w);
    if (!tu)
        throw GraphError("agree: vertices " + std::to_string(u) + " and " +
                         std::to_string(v) + " not adjacent");
    if (!tw)
        throw GraphError("agree: vertices " + std::to_string(w) + " and " +
                         std::to_string(v) + " not adjacent");
    return *tu == *tw;
}

bool between(const MixedGraph& g, Vertex u, Vertex w, Vertex v) {
    if (!g.adjacent(u, v) || !g.adjacent(w, v)) return false;
    return !agree(g, u, w, v);
}

namespace {

std::vector<Vertex> checked_sorted_set(const MixedGraph& g,
                                       const std::vector<Vertex>& set,
                                       const char* op) {
    if (set.empty())
        throw GraphError(std::string(op) + ": vertex set must be non-empty");
    std::vector<Vertex> out = set;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Vertex v : out)
        if (v < 0 || v >= g.vertex_count())
            throw GraphError(std::string(op) + ": vertex id " +
                             std::to_string(v) + " out of range");
    return out;
}

}  // namespace

HullTrace convex_hull(const MixedGraph& g, const std::vector<Vertex>& set) {
    HullTrace trace;
    std::vector<Vertex> current = checked_sorted_set(g, set, "convex_hull");
    std::vector<char> member(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : current) member[static_cast<size_t>(v)] = 1;
    trace.stages.push_back(current);

    for (;;) {
        std::vector<HullAddition> found;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (member[static_cast<size_t>(v)]) continue;
            bool done = false;
            for (size_t i = 0; i < current.size() && !done; ++i)
                for (size_t j = i + 1; j < current.size(); ++j)
                    if (between(g, current[i], current[j], v)) {
                        found.push_back({v, current[i], current[j]});
                        done = true;
                        break;
                    }
        }
        if (found.empty()) break;
        for (const HullAddition& a : found) {
            member[static_cast<size_t>(a.vertex)] = 1;
            current.push_back(a.vertex);
        }
        std::sort(current.begin(), current.end());
        trace.additions.push_back(std::move(found));
        trace.stages.push_back(current);
    }
    trace.final = current;
    return trace;
}

bool is_convex(const MixedGraph& g, const std::vector<Vertex>& set) {
    std::vector<Vertex> members = checked_sorted_set(g, set, "is_convex");
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (Vertex v : members) in[static_cast<size_t>(v)] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (between(g, members[i], members[j], v)) return false;
    }
    return true;
}

}  // namespace mng

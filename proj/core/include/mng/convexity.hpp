#ifndef MNG_CONVEXITY_HPP
#define MNG_CONVEXITY_HPP

#include <mng/graph.hpp>

#include <utility>
#include <vector>

// Betweenness and iterated convex closure.  Two vertices u, w agree on a
// common neighbour v when their adjacencies to v carry the same type: edges
// of one colour, arcs of one colour both into v, or arcs of one colour both
// out of v.  Otherwise v lies between u and w, and any vertex set closed
// under adding between-vertices of its pairs is convex.

namespace mng {

// Requires both uv and wv adjacent in the underlying graph.
bool agree(const MixedGraph& g, Vertex u, Vertex w, Vertex v);

// False whenever u or w is not adjacent to v.
bool between(const MixedGraph& g, Vertex u, Vertex w, Vertex v);

// One vertex admitted during hull growth, with the lexicographically least
// pair it lies between.
struct HullAddition {
    Vertex vertex;
    Vertex witness_u;
    Vertex witness_w;
};

// Growth record of the closure computation: stages[0] is the sorted input
// set, stages[i + 1] extends stages[i] by every vertex between a pair of
// stage-i vertices (all found vertices are added at once), and final is the
// fixpoint.  additions[i] lists what stage i + 1 gained.
struct HullTrace {
    std::vector<std::vector<Vertex>> stages;
    std::vector<std::vector<HullAddition>> additions;
    std::vector<Vertex> final;
};

// Least convex superset of a non-empty vertex set.
HullTrace convex_hull(const MixedGraph& g, const std::vector<Vertex>& set);

// No outside vertex lies between two members.
bool is_convex(const MixedGraph& g, const std::vector<Vertex>& set);

}  // namespace mng

#endif

#ifndef MNG_DECISION_HPP
#define MNG_DECISION_HPP

#include <mng/graph.hpp>
#include <mng/search.hpp>

#include <string>
#include <utility>
#include <vector>

// Polynomial decision procedures: the two-block simple colourability test
// with certificates, betweenness-based clique recognition, and the exact
// simple chromatic number of complete graphs by repeated hull
// identification.

namespace mng {

// Outcome of the two-block test.  A positive answer carries the partition;
// a negative one carries the connectivity facts that rule every split out.
struct TwoColourCertificate {
    bool answer = false;
    std::vector<Vertex> part_x;  // when positive: every cross adjacency runs
    std::vector<Vertex> part_y;  // from part_x towards part_y, or is an edge
    struct EdgeColourFact {
        int colour;
        bool connected_without;  // underlying graph minus this colour class
    };
    struct ArcColourFact {
        int colour;
        bool condensation_strongly_connected;
    };
    std::vector<EdgeColourFact> edge_facts;
    std::vector<ArcColourFact> arc_facts;
    std::string note;  // degenerate cases explained here
};

// Components of the underlying graph after removing one arc colour class,
// with the arcs of that colour projected onto the components.
struct CondensationDigraph {
    std::vector<std::vector<Vertex>> components;
    std::vector<int> component_of;
    std::vector<std::pair<int, int>> arcs;  // deduplicated, sorted

    bool strongly_connected() const;
};

CondensationDigraph condensation(const MixedGraph& g, int arc_colour);

// Whether the graph admits a simple colouring with two blocks.  Linear
// case analysis over colour classes; no enumeration.
TwoColourCertificate decide_chi_s_two(const MixedGraph& g);

// Every non-adjacent pair has a vertex between its members.
bool is_clique(const MixedGraph& g);

// Every pair generates the whole vertex set by convex closure.
bool is_simple_clique(const MixedGraph& g);

struct CompleteChiS {
    int value;
    VertexMap colouring;  // onto 0 .. value-1
};

// Exact simple chromatic number of a complete graph, with a minimum
// colouring, found by identifying the hull of a generating pair until the
// graph collapses, two-colours, or becomes a simple clique.  Throws
// GraphError when the graph is not complete.
CompleteChiS complete_chi_s(const MixedGraph& g);

}  // namespace mng

#endif

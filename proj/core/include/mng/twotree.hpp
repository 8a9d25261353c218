#ifndef MNG_TWOTREE_HPP
#define MNG_TWOTREE_HPP

#include <mng/graph.hpp>

#include <array>
#include <cstdint>
#include <vector>

// 2-tree recognition by degree-2 peeling and the constructive simple
// colourings of 2-trees: oriented ones into the directed 3-cycle, two-edge-
// coloured ones into the K5 whose colour-1 edges form a 5-cycle.  The
// extension tables are derived by exhaustive search at first use and every
// row is verified before the table is handed out.

namespace mng {

class Not2TreeError : public GraphError {
  public:
    using GraphError::GraphError;
};

struct PeelStep {
    Vertex peeled;
    Vertex n1, n2;  // the two neighbours at peel time, n1 < n2
};

// Elimination order reducing the underlying graph to a single edge; the
// reverse order is a construction order.
struct PeelOrder {
    std::vector<PeelStep> steps;
    Vertex base_u, base_v;
};

// Requires the underlying graph to be a 2-tree (a single edge counts as the
// degenerate base); throws Not2TreeError describing the first stuck state
// otherwise.  Deterministic: always peels the least eligible vertex id.
PeelOrder recognize_2tree(const MixedGraph& g);

enum class TwoTreeKind { oriented, two_edge_coloured };

// Extension rule for one peeled vertex z with anchors z1 (image normalised
// to target vertex 0) and z2 (image 0 or 1).  Row index packs
// (type to z1, type to z2, image of z2): for oriented graphs a type is
// 0 = arc from the neighbour into z, 1 = arc from z to the neighbour; for
// two-edge-coloured graphs it is colour - 1.
struct ExtensionTable {
    TwoTreeKind kind;
    MixedGraph target;
    std::array<int, 8> image;

    int row(int type1, int type2, int second_anchor) const {
        return image[static_cast<size_t>((type1 << 2) | (type2 << 1) |
                                         second_anchor)];
    }
};

const ExtensionTable& derive_oriented_table();
const ExtensionTable& derive_2ec_table();

// Simple homomorphism into the directed 3-cycle; at most 3 distinct images.
VertexMap colour_oriented_2tree(const MixedGraph& g);

// Simple homomorphism into K5 with colour-1 C5; at most 5 distinct images.
VertexMap colour_2ec_2tree(const MixedGraph& g);

// Seeded random 2-tree: start from a triangle, repeatedly attach a vertex
// to a uniformly chosen existing adjacent pair; each adjacency gets a
// uniform orientation (oriented kind) or colour (two-edge-coloured kind).
MixedGraph random_2tree(int vertex_count, TwoTreeKind kind, std::uint64_t seed);

}  // namespace mng

#endif

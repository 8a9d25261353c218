#ifndef MNG_SEARCH_HPP
#define MNG_SEARCH_HPP

#include <mng/graph.hpp>

#include <optional>
#include <vector>

// Exhaustive-search ground truth at desk scale: colouring validators,
// brute-force chromatic numbers with canonical witnesses, and backtracking
// homomorphism search.  Everything here is deterministic; enumeration order
// is the lexicographic order of restricted growth strings, so the first
// valid witness is canonical.

namespace mng {

// Unordered partition of the vertex set, kept canonical: blocks sorted by
// least member, members sorted ascending.
struct Partition {
    std::vector<std::vector<Vertex>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    // Dense block index per vertex; validates shape against the vertex count
    // and throws GraphError on overlaps, gaps or out-of-range ids.
    std::vector<int> block_index(int vertex_count) const;

    static Partition singletons(int vertex_count);
    static Partition from_block_index(const std::vector<int>& index);

    bool operator==(const Partition&) const = default;
};

// A partition is a simple colouring when it is non-trivial (more than one
// block, unless the graph has a single vertex) and all adjacencies between
// any two blocks carry one type in one direction.  Blocks may contain
// adjacent vertices.
bool is_simple_colouring(const MixedGraph& g, const Partition& p);

// Classic proper colouring: blocks independent, and adjacencies between two
// blocks uniform in type and direction.  A one-block partition is fine when
// the graph has no adjacencies.
bool is_colouring(const MixedGraph& g, const Partition& p);

struct BruteResult {
    int value;
    Partition witness;
};

inline constexpr int kDefaultBruteBudget = 12;

// Least k admitting a simple colouring with k blocks, with the
// lexicographically first witness.  Throws GraphError past the vertex
// budget.
BruteResult brute_chi_s(const MixedGraph& g, int budget = kDefaultBruteBudget);

// Least k admitting a proper colouring with k blocks.
BruteResult brute_chi(const MixedGraph& g, int budget = kDefaultBruteBudget);

// Every minimum simple colouring, in enumeration order.
std::vector<Partition> enumerate_min_simple_colourings(
    const MixedGraph& g, int budget = kDefaultBruteBudget);

// Map validators.  A homomorphism sends adjacent vertices to distinct
// adjacent vertices preserving type; a simple homomorphism may merge
// adjacent vertices, must preserve the type whenever images differ, and must
// be non-constant unless the source has one vertex.
bool is_homomorphism_map(const MixedGraph& g, const VertexMap& f,
                         const MixedGraph& h);
bool is_simple_homomorphism_map(const MixedGraph& g, const VertexMap& f,
                                const MixedGraph& h);

// Backtracking search in decreasing-degree vertex order, target vertices
// tried ascending; the first map found is returned.
std::optional<VertexMap> find_homomorphism(const MixedGraph& g,
                                           const MixedGraph& h);
std::optional<VertexMap> find_simple_homomorphism(const MixedGraph& g,
                                                  const MixedGraph& h,
                                                  bool surjective = false);

// Quotient collapsing each block to one vertex; requires the partition to be
// a simple colouring (or a single vertex per block).  Block i of the
// canonical ordering becomes vertex i.
std::pair<MixedGraph, VertexMap> quotient_by_partition(const MixedGraph& g,
                                                       const Partition& p);

}  // namespace mng

#endif

#ifndef MNG_FAMILIES_HPP
#define MNG_FAMILIES_HPP

#include <mng/graph.hpp>

#include <cstdint>
#include <vector>

// Generators: circulant clique families, the double-cycle clique pair on
// 2n vertices, small standard digraphs, exhaustive enumerations at desk
// scale and seeded random instances.  All vertex numbering is 0-based and
// deterministic.

namespace mng {

// Oriented circulant on n vertices (n odd, n >= 5): arc u -> v whenever
// (u - v) mod n lies in {2, n - 1} or is divisible by 4.  A simple clique
// on every valid n.
MixedGraph cayley_oriented_clique(int n);

// Two-edge-coloured complete circulant on n >= 5 vertices: every pair is
// adjacent, colour 1 exactly on the hamiltonian cycle of circular distance 1,
// colour 2 on every other pair.  A simple clique for every n >= 5.
MixedGraph cayley_2ec_clique(int n);

// Two-edge-coloured clique on 2n vertices (n >= 3): sides x_0..x_{n-1} and
// y_0..y_{n-1} (y_i is vertex n + i), colour-1 cycles on both sides plus the
// matching x_i y_i, colour-2 edges for the rest of K_{n,n}.
MixedGraph double_cycle_2ec_clique(int n);

// Oriented companion on the same vertex set: the x side carries the ascending
// cycle x_i -> x_{i+1}, the y side the descending cycle y_{i+1} -> y_i, and
// across the sides x_i -> y_j when i <= j, y_j -> x_i when j < i.
MixedGraph double_cycle_oriented_clique(int n);

// Arcs i -> j for i < j.
MixedGraph transitive_tournament(int k);

// Arcs i -> i + 1 mod k.
MixedGraph directed_cycle(int k);

// Tournament on k vertices selected by one orientation bit per vertex pair,
// pairs (u, v), u < v, in lexicographic order; bit set orients u -> v.
MixedGraph tournament_from_bits(int k, std::uint64_t bits);

// Two-edge-coloured complete graph on k vertices selected by one colour bit
// per pair in the same pair order; bit set means colour 2.
MixedGraph two_edge_coloured_complete_from_bits(int k, std::uint64_t bits);

// All labelled instances, in bit order.  Capped at k <= 6.
std::vector<MixedGraph> enumerate_tournaments(int k);
std::vector<MixedGraph> enumerate_2ec_complete(int k);

// Seeded Erdos-Renyi style instance: every pair independently adjacent with
// probability p, the adjacency type uniform over m arc colours in both
// orientations plus n edge colours.
MixedGraph random_mixed(int arc_colours, int edge_colours, int vertex_count,
                        double p, std::uint64_t seed);

}  // namespace mng

#endif

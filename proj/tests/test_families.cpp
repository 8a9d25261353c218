#include <mng/decision.hpp>
#include <mng/families.hpp>
#include <mng/graph.hpp>
#include <mng/rng.hpp>
#include <mng/search.hpp>
#include <mng/twotree.hpp>

#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"

using namespace mng;

TEST_SUITE_BEGIN("families");

TEST_CASE("circulant tournament structure") {
    MixedGraph g = cayley_oriented_clique(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.arc_colours() == 1);
    CHECK(g.edge_colours() == 0);
    CHECK(is_complete(g));
    // out-neighbourhood of 0 is {1, 3}: differences -1 and -3 hit the
    // connection set
    std::set<Vertex> out;
    for (const Adjacency& a : g.adjacencies())
        if (a.u == 0) out.insert(a.v);
    CHECK(out == std::set<Vertex>{1, 3});

    // the connection set {2, n-1} plus the multiples of 4 yields a tournament
    // only for n = 5 and 7; for larger n some pairs stay non-adjacent, yet the
    // graph remains an oriented simple clique
    std::map<int, int> set_size{{5, 2}, {7, 3}, {9, 3}, {11, 4}};
    for (int n : {5, 7, 9, 11}) {
        MixedGraph t = cayley_oriented_clique(n);
        CHECK(is_complete(t) == (n == 5 || n == 7));
        CHECK(t.arc_count() == n * set_size[n]);
        // circulant sanity: constant out-degree equal to the connection-set size
        std::vector<int> outdeg(static_cast<size_t>(n), 0);
        for (const Adjacency& a : t.adjacencies()) ++outdeg[static_cast<size_t>(a.u)];
        for (int d : outdeg) CHECK(d == set_size[n]);
    }

    CHECK_THROWS_AS(cayley_oriented_clique(4), GraphError);
    CHECK_THROWS_AS(cayley_oriented_clique(6), GraphError);
    CHECK_THROWS_AS(cayley_oriented_clique(3), GraphError);
}

TEST_CASE("circulant 2-edge-coloured structure") {
    MixedGraph g = cayley_2ec_clique(5);
    CHECK(g.vertex_count() == 5);
    CHECK(is_complete(g));
    CHECK(g.edge_count() == 10);
    // distance-1 pairs carry colour 1, the pentagram colour 2
    CHECK(g.type(0, 1)->colour == 1);
    CHECK(g.type(0, 4)->colour == 1);
    CHECK(g.type(0, 2)->colour == 2);
    // identical to the 2-tree colouring target
    CHECK(g == derive_2ec_table().target);

    for (int n : {5, 6, 7, 8}) {
        MixedGraph t = cayley_2ec_clique(n);
        CHECK(is_complete(t));
        CHECK(t.arc_count() == 0);
        CHECK(t.edge_count() == n * (n - 1) / 2);
        int ones = 0;
        for (const Adjacency& a : t.adjacencies())
            if (a.colour == 1) ++ones;
        CHECK(ones == n);  // exactly the hamiltonian ring
    }
    CHECK_THROWS_AS(cayley_2ec_clique(4), GraphError);
}

TEST_CASE("doubled-cycle families") {
    MixedGraph h3 = double_cycle_2ec_clique(3);
    CHECK(h3.vertex_count() == 6);
    CHECK(h3.edge_count() == 15);
    // on three vertices the two triangles and the cross edges cover all of
    // K6, so the graph is complete; from four on the missing side diagonals
    // break completeness
    CHECK(is_complete(h3));
    CHECK_FALSE(is_complete(double_cycle_2ec_clique(4)));
    int colour1 = 0;
    for (const Adjacency& a : h3.adjacencies())
        if (a.colour == 1) ++colour1;
    CHECK(colour1 == 9);

    MixedGraph g3 = double_cycle_oriented_clique(3);
    CHECK(g3.vertex_count() == 6);
    CHECK(g3.arc_count() == 15);
    CHECK(g3.edge_count() == 0);
    CHECK(is_complete(g3));
    // x_i -> y_j exactly when i <= j
    CHECK(g3.type(0, 3)->forward);   // x_0 -> y_0
    CHECK(g3.type(1, 3)->forward == false);  // y_0 -> x_1
    CHECK_THROWS_AS(double_cycle_2ec_clique(2), GraphError);
    CHECK_THROWS_AS(double_cycle_oriented_clique(2), GraphError);
}

TEST_CASE("the named families are all simple cliques") {
    for (int n : {5, 7, 9, 11}) CHECK(is_simple_clique(cayley_oriented_clique(n)));
    for (int n : {5, 6, 7, 8}) CHECK(is_simple_clique(cayley_2ec_clique(n)));
    for (int n : {3, 4, 5}) CHECK(is_simple_clique(double_cycle_2ec_clique(n)));
    for (int n : {3, 4, 5}) CHECK(is_simple_clique(double_cycle_oriented_clique(n)));
}

TEST_CASE("fixed small digraph generators") {
    MixedGraph t4 = transitive_tournament(4);
    CHECK(t4.arc_count() == 6);
    for (const Adjacency& a : t4.adjacencies()) CHECK(a.u < a.v);
    CHECK(transitive_tournament(1).vertex_count() == 1);
    CHECK_THROWS_AS(transitive_tournament(0), GraphError);

    MixedGraph c5 = directed_cycle(5);
    CHECK(c5.arc_count() == 5);
    CHECK(c5.type(4, 0)->forward);
    CHECK_THROWS_AS(directed_cycle(2), GraphError);
}

TEST_CASE("bit-indexed enumeration covers everything exactly once") {
    auto ts = enumerate_tournaments(4);
    REQUIRE(ts.size() == 64);
    std::set<std::vector<Adjacency>> seen;
    for (const MixedGraph& g : ts) {
        CHECK(is_complete(g));
        CHECK(g.arc_count() == 6);
        seen.insert(g.adjacencies());
    }
    CHECK(seen.size() == 64);
    // a set bit orients its pair low to high, so all-ones is transitive
    CHECK(tournament_from_bits(4, 63) == transitive_tournament(4));

    auto es = enumerate_2ec_complete(3);
    REQUIRE(es.size() == 8);
    std::set<std::vector<Adjacency>> eseen;
    for (const MixedGraph& g : es) {
        CHECK(is_complete(g));
        CHECK(g.edge_count() == 3);
        eseen.insert(g.adjacencies());
    }
    CHECK(eseen.size() == 8);
    // bit i set flips pair i (in lexicographic pair order) to colour 2
    MixedGraph k3 = two_edge_coloured_complete_from_bits(3, 0b001);
    CHECK(k3.type(0, 1)->colour == 2);
    CHECK(k3.type(0, 2)->colour == 1);
    CHECK(k3.type(1, 2)->colour == 1);

    CHECK_THROWS_AS(enumerate_tournaments(7), GraphError);
    CHECK_THROWS_AS(tournament_from_bits(12, 0), GraphError);
    CHECK_THROWS_AS(tournament_from_bits(3, 8), GraphError);
}

TEST_CASE("seeded random graphs are reproducible") {
    MixedGraph a = random_mixed(2, 2, 12, 0.5, 99);
    MixedGraph b = random_mixed(2, 2, 12, 0.5, 99);
    CHECK(a == b);
    CHECK_FALSE(a == random_mixed(2, 2, 12, 0.5, 100));

    CHECK(random_mixed(1, 1, 10, 0.0, 1).adjacency_count() == 0);
    MixedGraph full = random_mixed(1, 1, 10, 1.0, 1);
    CHECK(is_complete(full));

    // declared bounds hold regardless of density
    MixedGraph c = random_mixed(3, 2, 15, 0.7, 5);
    CHECK(c.arc_colours() == 3);
    CHECK(c.edge_colours() == 2);
    for (const Adjacency& adj : c.adjacencies()) {
        if (adj.kind == AdjKind::arc) CHECK(adj.colour <= 3);
        if (adj.kind == AdjKind::edge) CHECK(adj.colour <= 2);
    }

    CHECK_THROWS_AS(random_mixed(0, 0, 5, 0.5, 1), GraphError);
    CHECK_THROWS_AS(random_mixed(1, 1, 0, 0.5, 1), GraphError);
    CHECK_THROWS_AS(random_mixed(1, 1, 5, 1.5, 1), GraphError);
    CHECK_THROWS_AS(random_mixed(-1, 1, 5, 0.5, 1), GraphError);
}

TEST_CASE("substreams and the generator behave deterministically") {
    CHECK(substream_seed(7, 0) != substream_seed(7, 1));
    CHECK(substream_seed(7, 0) != substream_seed(8, 0));
    CHECK(substream_seed(7, 3) == substream_seed(7, 3));

    Rng r1(42), r2(42);
    for (int i = 0; i < 100; ++i) CHECK(r1.raw() == r2.raw());
    Rng r(43);
    for (int i = 0; i < 200; ++i) {
        CHECK(r.below(7) < 7);
        int x = r.int_in(-3, 3);
        CHECK(x >= -3);
        CHECK(x <= 3);
        double u = r.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_SUITE_END();

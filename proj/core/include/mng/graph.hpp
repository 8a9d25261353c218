#ifndef MNG_GRAPH_HPP
#define MNG_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Mixed graphs with m arc colours and n edge colours: loopless, at most one
// adjacency per vertex pair, every adjacency either a coloured arc or a
// coloured edge.  Vertices are dense 0-based ids; colours are 1-based.

namespace mng {

using Vertex = int;

enum class AdjKind : std::uint8_t { arc, edge };

// A single adjacency as supplied to build(): for arcs, u is the tail and v
// the head; for edges the order of u and v carries no meaning.
struct Adjacency {
    AdjKind kind;
    int colour;
    Vertex u;
    Vertex v;

    auto operator<=>(const Adjacency&) const = default;
};

// The type of an adjacency relative to an *ordered* vertex pair (first,
// second): kind, colour, and for arcs whether the arc points from first to
// second.  For edges `forward` is normalised to true so that default
// equality compares kind and colour only.
struct AdjacencyType {
    AdjKind kind;
    int colour;
    bool forward;

    bool operator==(const AdjacencyType&) const = default;
};

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Structural problem in graph construction or in an operation's input.
class GraphError : public Error {
  public:
    using Error::Error;
};

// Vertex identification refused: two members of the identified set present
// different adjacency types towards an outside vertex.  The offending triple
// is exposed for callers that want to report or test it.
class IdentifyError : public GraphError {
  public:
    IdentifyError(const std::string& what, Vertex s1, Vertex s2, Vertex outside)
        : GraphError(what), s1_(s1), s2_(s2), outside_(outside) {}

    Vertex first_member() const { return s1_; }
    Vertex second_member() const { return s2_; }
    Vertex outside_vertex() const { return outside_; }

  private:
    Vertex s1_, s2_, outside_;
};

// A vertex function between two graphs, stored as a dense image table.
struct VertexMap {
    int source_size = 0;
    int target_size = 0;
    std::vector<Vertex> image;

    Vertex operator()(Vertex v) const { return image[static_cast<size_t>(v)]; }

    static VertexMap identity(int size);
    bool well_formed() const;
    bool surjective() const;
    bool constant() const;

    bool operator==(const VertexMap&) const = default;
};

// Composite beta . phi; throws GraphError when the sizes do not chain.
VertexMap compose(const VertexMap& phi, const VertexMap& beta);

class MixedGraph {
  public:
    MixedGraph() = delete;

    int arc_colours() const { return m_; }
    int edge_colours() const { return n_; }
    int vertex_count() const { return v_; }

    bool adjacent(Vertex u, Vertex v) const {
        return cell(u, v).rel != Rel::none;
    }

    // Adjacency type relative to the ordered pair (u, v); empty when the
    // pair is not adjacent.
    std::optional<AdjacencyType> type(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbours(Vertex v) const {
        return adj_[static_cast<size_t>(v)];
    }

    int adjacency_count() const { return arc_count_ + edge_count_; }
    int arc_count() const { return arc_count_; }
    int edge_count() const { return edge_count_; }

    // All adjacencies in canonical order: arcs before edges, then by colour,
    // then by smaller and larger endpoint.  Arcs are emitted tail first.
    std::vector<Adjacency> adjacencies() const;

    // Optional display label; empty when the vertex has none.
    const std::string& label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }

    // Same graph with larger declared colour bounds.
    MixedGraph widened(int arc_colours, int edge_colours) const;

    bool operator==(const MixedGraph&) const = default;

  private:
    enum class Rel : std::uint8_t { none, edge, arc_out, arc_in };
    struct Cell {
        Rel rel = Rel::none;
        int colour = 0;
        bool operator==(const Cell&) const = default;
    };

    MixedGraph(int m, int n, int vertices) : m_(m), n_(n), v_(vertices) {}

    Cell& cell(Vertex u, Vertex v) {
        return cells_[static_cast<size_t>(u) * static_cast<size_t>(v_) +
                      static_cast<size_t>(v)];
    }
    const Cell& cell(Vertex u, Vertex v) const {
        return cells_[static_cast<size_t>(u) * static_cast<size_t>(v_) +
                      static_cast<size_t>(v)];
    }

    int m_, n_, v_;
    int arc_count_ = 0, edge_count_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;

    friend MixedGraph build(int, int, int, const std::vector<Adjacency>&,
                            std::vector<std::string>);
};

// Validating constructor.  Rejects non-positive vertex counts, negative
// colour bounds, m + n = 0, out-of-range vertex ids and colours, loops and
// duplicate pairs; each error message names the offending entry.
MixedGraph build(int arc_colours, int edge_colours, int vertex_count,
                 const std::vector<Adjacency>& adjacencies,
                 std::vector<std::string> labels = {});

// The underlying graph: every adjacency becomes an edge of colour 1.
MixedGraph underlying(const MixedGraph& g);

// Whether the ordered pairs (u1, v1) and (u2, v2) carry the same adjacency
// type.  Both pairs must be adjacent.
bool same_type(const MixedGraph& g, Vertex u1, Vertex v1, Vertex u2, Vertex v2);

// Quotient identifying the vertex set `s` to a single vertex.  Requires every
// outside vertex to see one consistent adjacency type from the members of `s`
// it is adjacent to (adjacency to only some members is fine: the class adopts
// it).  Returns the quotient and the quotient map; vertices keep their
// relative order, with the class placed at the position of its least member.
std::pair<MixedGraph, VertexMap> identify(const MixedGraph& g,
                                          const std::vector<Vertex>& s);

// Every vertex pair adjacent.
bool is_complete(const MixedGraph& g);

}  // namespace mng

#endif

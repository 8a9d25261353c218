#include <mng/search.hpp>

#include <algorithm>
#include <numeric>

namespace mng {

std::vector<int> Partition::block_index(int vertex_count) const {
    std::vector<int> index(static_cast<size_t>(vertex_count), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw GraphError("partition: block " + std::to_string(b) +
                             " is empty");
        for (Vertex v : blocks[b]) {
            if (v < 0 || v >= vertex_count)
                throw GraphError("partition: vertex id " + std::to_string(v) +
                                 " out of range");
            if (index[static_cast<size_t>(v)] != -1)
                throw GraphError("partition: vertex " + std::to_string(v) +
                                 " appears twice");
            index[static_cast<size_t>(v)] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < vertex_count; ++v)
        if (index[static_cast<size_t>(v)] == -1)
            throw GraphError("partition: vertex " + std::to_string(v) +
                             " is uncovered");
    return index;
}

Partition Partition::singletons(int vertex_count) {
    Partition p;
    p.blocks.reserve(static_cast<size_t>(vertex_count));
    for (Vertex v = 0; v < vertex_count; ++v) p.blocks.push_back({v});
    return p;
}

Partition Partition::from_block_index(const std::vector<int>& index) {
    int max_block = -1;
    for (int b : index) max_block = std::max(max_block, b);
    std::vector<std::vector<Vertex>> raw(static_cast<size_t>(max_block + 1));
    for (size_t v = 0; v < index.size(); ++v) {
        if (index[v] < 0)
            throw GraphError("partition: negative block index");
        raw[static_cast<size_t>(index[v])].push_back(static_cast<Vertex>(v));
    }
    Partition p;
    for (auto& block : raw)
        if (!block.empty()) p.blocks.push_back(std::move(block));
    std::sort(p.blocks.begin(), p.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return p;
}

namespace {

// Adjacency type between two blocks, normalised to read from the lower block
// index towards the higher.
struct CrossTable {
    explicit CrossTable(int blocks)
        : k(blocks), filled(static_cast<size_t>(k) * k, 0),
          type(static_cast<size_t>(k) * k) {}

    int k;
    std::vector<char> filled;
    std::vector<AdjacencyType> type;

    size_t slot(int p, int q) const {
        return static_cast<size_t>(p) * static_cast<size_t>(k) +
               static_cast<size_t>(q);
    }
};

bool uniform_cross_types(const MixedGraph& g, const std::vector<int>& index,
                         int k, bool require_independent_blocks) {
    CrossTable table(k);
    for (const Adjacency& a : g.adjacencies()) {
        int bu = index[static_cast<size_t>(a.u)];
        int bv = index[static_cast<size_t>(a.v)];
        if (bu == bv) {
            if (require_independent_blocks) return false;
            continue;
        }
        Vertex lo = bu < bv ? a.u : a.v;
        Vertex hi = bu < bv ? a.v : a.u;
        AdjacencyType t = *g.type(lo, hi);
        size_t s = table.slot(std::min(bu, bv), std::max(bu, bv));
        if (!table.filled[s]) {
            table.filled[s] = 1;
            table.type[s] = t;
        } else if (!(table.type[s] == t)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_simple_colouring(const MixedGraph& g, const Partition& p) {
    std::vector<int> index = p.block_index(g.vertex_count());
    if (g.vertex_count() == 1) return true;
    if (p.block_count() < 2) return false;
    return uniform_cross_types(g, index, p.block_count(), false);
}

bool is_colouring(const MixedGraph& g, const Partition& p) {
    std::vector<int> index = p.block_index(g.vertex_count());
    return uniform_cross_types(g, index, p.block_count(), true);
}

namespace {

// Depth-first enumeration of restricted growth strings with exactly
// `blocks` values, pruned by the cross-type consistency of the prefix.
// Assignments follow vertex id order, so the first completion is the
// lexicographically least witness.
class PartitionSearch {
  public:
    PartitionSearch(const MixedGraph& g, int blocks, bool proper)
        : g_(g), n_(g.vertex_count()), k_(blocks), proper_(proper),
          assignment_(static_cast<size_t>(n_), -1), table_(blocks) {}

    // Runs the search; returns the first witness, or collects every witness
    // when `all` is non-null.
    std::optional<Partition> run(std::vector<Partition>* all = nullptr) {
        all_ = all;
        found_.reset();
        dfs(0, -1);
        return found_;
    }

  private:
    bool dfs(int i, int max_used) {
        if (i == n_) {
            if (max_used != k_ - 1) return false;
            Partition p = Partition::from_block_index(assignment_);
            if (all_) {
                all_->push_back(std::move(p));
                return false;  // keep enumerating
            }
            found_ = std::move(p);
            return true;
        }
        int limit = std::min(max_used + 1, k_ - 1);
        for (int b = 0; b <= limit; ++b) {
            int new_max = std::max(max_used, b);
            if (k_ - 1 - new_max > n_ - 1 - i) continue;
            size_t undo_mark = trail_.size();
            if (consistent(i, b)) {
                assignment_[static_cast<size_t>(i)] = b;
                if (dfs(i + 1, new_max)) return true;
                assignment_[static_cast<size_t>(i)] = -1;
            }
            while (trail_.size() > undo_mark) {
                table_.filled[trail_.back()] = 0;
                trail_.pop_back();
            }
        }
        return false;
    }

    bool consistent(int i, int b) {
        for (Vertex j : g_.neighbours(i)) {
            if (j >= i) break;  // neighbour lists are sorted
            int bj = assignment_[static_cast<size_t>(j)];
            if (bj == b) {
                if (proper_) return false;
                continue;
            }
            Vertex lo = b < bj ? i : j;
            Vertex hi = b < bj ? j : i;
            AdjacencyType t = *g_.type(lo, hi);
            size_t s = table_.slot(std::min(b, bj), std::max(b, bj));
            if (!table_.filled[s]) {
                table_.filled[s] = 1;
                table_.type[s] = t;
                trail_.push_back(s);
            } else if (!(table_.type[s] == t)) {
                return false;
            }
        }
        return true;
    }

    const MixedGraph& g_;
    int n_, k_;
    bool proper_;
    std::vector<int> assignment_;
    CrossTable table_;
    std::vector<size_t> trail_;
    std::vector<Partition>* all_ = nullptr;
    std::optional<Partition> found_;
};

void check_budget(const MixedGraph& g, int budget, const char* op) {
    if (g.vertex_count() > budget)
        throw GraphError(std::string(op) + ": vertex count " +
                         std::to_string(g.vertex_count()) +
                         " exceeds enumeration budget " +
                         std::to_string(budget));
}

}  // namespace

BruteResult brute_chi_s(const MixedGraph& g, int budget) {
    check_budget(g, budget, "brute_chi_s");
    int n = g.vertex_count();
    if (n == 1) return {1, Partition::singletons(1)};
    for (int k = 2; k <= n; ++k) {
        PartitionSearch search(g, k, false);
        if (auto witness = search.run()) return {k, std::move(*witness)};
    }
    // All singletons are always a simple colouring of a loopless graph.
    return {n, Partition::singletons(n)};
}

BruteResult brute_chi(const MixedGraph& g, int budget) {
    check_budget(g, budget, "brute_chi");
    int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        PartitionSearch search(g, k, true);
        if (auto witness = search.run()) return {k, std::move(*witness)};
    }
    return {n, Partition::singletons(n)};
}

std::vector<Partition> enumerate_min_simple_colourings(const MixedGraph& g,
                                                       int budget) {
    int k = brute_chi_s(g, budget).value;
    if (g.vertex_count() == 1) return {Partition::singletons(1)};
    std::vector<Partition> all;
    PartitionSearch search(g, k, false);
    search.run(&all);
    return all;
}

bool is_homomorphism_map(const MixedGraph& g, const VertexMap& f,
                         const MixedGraph& h) {
    if (!f.well_formed() || f.source_size != g.vertex_count() ||
        f.target_size != h.vertex_count())
        return false;
    for (const Adjacency& a : g.adjacencies()) {
        Vertex fu = f(a.u), fv = f(a.v);
        if (fu == fv) return false;
        auto t = h.type(fu, fv);
        if (!t || !(*t == *g.type(a.u, a.v))) return false;
    }
    return true;
}

bool is_simple_homomorphism_map(const MixedGraph& g, const VertexMap& f,
                                const MixedGraph& h) {
    if (!f.well_formed() || f.source_size != g.vertex_count() ||
        f.target_size != h.vertex_count())
        return false;
    if (g.vertex_count() == 1) return true;
    if (f.constant()) return false;
    for (const Adjacency& a : g.adjacencies()) {
        Vertex fu = f(a.u), fv = f(a.v);
        if (fu == fv) continue;
        auto t = h.type(fu, fv);
        if (!t || !(*t == *g.type(a.u, a.v))) return false;
    }
    return true;
}

namespace {

class HomSearch {
  public:
    HomSearch(const MixedGraph& g, const MixedGraph& h, bool simple,
              bool surjective)
        : g_(g), h_(h), simple_(simple), surjective_(surjective),
          order_(static_cast<size_t>(g.vertex_count())),
          image_(static_cast<size_t>(g.vertex_count()), -1),
          cover_(static_cast<size_t>(h.vertex_count()), 0) {
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return g.neighbours(a).size() > g.neighbours(b).size();
        });
        uncovered_ = h.vertex_count();
    }

    std::optional<VertexMap> run() {
        if (dfs(0)) {
            VertexMap f;
            f.source_size = g_.vertex_count();
            f.target_size = h_.vertex_count();
            f.image = image_;
            return f;
        }
        return std::nullopt;
    }

  private:
    bool dfs(size_t pos) {
        if (pos == order_.size()) return leaf_ok();
        if (surjective_ &&
            uncovered_ > static_cast<int>(order_.size() - pos))
            return false;
        Vertex u = order_[pos];
        for (Vertex t = 0; t < h_.vertex_count(); ++t) {
            if (!compatible(u, t)) continue;
            image_[static_cast<size_t>(u)] = t;
            if (cover_[static_cast<size_t>(t)]++ == 0) --uncovered_;
            if (dfs(pos + 1)) return true;
            if (--cover_[static_cast<size_t>(t)] == 0) ++uncovered_;
            image_[static_cast<size_t>(u)] = -1;
        }
        return false;
    }

    bool compatible(Vertex u, Vertex t) const {
        for (Vertex w : g_.neighbours(u)) {
            Vertex tw = image_[static_cast<size_t>(w)];
            if (tw == -1) continue;
            if (t == tw) {
                if (!simple_) return false;
                continue;
            }
            auto th = h_.type(t, tw);
            if (!th || !(*th == *g_.type(u, w))) return false;
        }
        return true;
    }

    bool leaf_ok() const {
        if (surjective_ && uncovered_ > 0) return false;
        if (simple_ && g_.vertex_count() > 1) {
            for (Vertex v : image_)
                if (v != image_[0]) return true;
            return false;
        }
        return true;
    }

    const MixedGraph& g_;
    const MixedGraph& h_;
    bool simple_, surjective_;
    std::vector<Vertex> order_;
    std::vector<Vertex> image_;
    std::vector<int> cover_;
    int uncovered_ = 0;
};

}  // namespace

std::optional<VertexMap> find_homomorphism(const MixedGraph& g,
                                           const MixedGraph& h) {
    return HomSearch(g, h, false, false).run();
}

std::optional<VertexMap> find_simple_homomorphism(const MixedGraph& g,
                                                  const MixedGraph& h,
                                                  bool surjective) {
    return HomSearch(g, h, true, surjective).run();
}

std::pair<MixedGraph, VertexMap> quotient_by_partition(const MixedGraph& g,
                                                       const Partition& p) {
    std::vector<int> index = p.block_index(g.vertex_count());
    int k = p.block_count();
    if (g.vertex_count() >= 2 && k < 2)
        throw GraphError("quotient_by_partition: partition is trivial");

    CrossTable table(k);
    for (const Adjacency& a : g.adjacencies()) {
        int bu = index[static_cast<size_t>(a.u)];
        int bv = index[static_cast<size_t>(a.v)];
        if (bu == bv) continue;
        Vertex lo = bu < bv ? a.u : a.v;
        Vertex hi = bu < bv ? a.v : a.u;
        AdjacencyType t = *g.type(lo, hi);
        size_t s = table.slot(std::min(bu, bv), std::max(bu, bv));
        if (!table.filled[s]) {
            table.filled[s] = 1;
            table.type[s] = t;
        } else if (!(table.type[s] == t)) {
            throw GraphError(
                "quotient_by_partition: blocks " + std::to_string(bu) +
                " and " + std::to_string(bv) + " see conflicting types");
        }
    }

    std::vector<Adjacency> adj;
    for (int pb = 0; pb < k; ++pb)
        for (int q = pb + 1; q < k; ++q) {
            size_t s = table.slot(pb, q);
            if (!table.filled[s]) continue;
            const AdjacencyType& t = table.type[s];
            if (t.kind == AdjKind::edge)
                adj.push_back({AdjKind::edge, t.colour, pb, q});
            else if (t.forward)
                adj.push_back({AdjKind::arc, t.colour, pb, q});
            else
                adj.push_back({AdjKind::arc, t.colour, q, pb});
        }

    VertexMap f;
    f.source_size = g.vertex_count();
    f.target_size = k;
    f.image.assign(index.begin(), index.end());
    return {build(g.arc_colours(), g.edge_colours(), k, adj), f};
}

}  // namespace mng

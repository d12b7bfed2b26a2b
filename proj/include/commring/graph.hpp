#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commring/bitvec.hpp"
#include "commring/ring.hpp"

namespace commring {

/// Undirected simple graph on vertices 0..m-1 with bit-packed adjacency
/// rows. Optional labels carry ring element indices through exports.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int m) : m_(m), rows_(m, BitVec(m)) {}

    int vertex_count() const { return m_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const BitVec& row(int v) const { return rows_[v]; }
    int degree(int v) const { return rows_[v].count(); }

    int max_degree() const;
    int min_degree() const;

    bool has_labels() const { return !labels_.empty(); }
    int label(int v) const { return labels_[v]; }
    void set_labels(std::vector<int> labels);

    bool operator==(const SimpleGraph& o) const {
        return m_ == o.m_ && rows_ == o.rows_;
    }

private:
    int m_ = 0;
    std::vector<BitVec> rows_;
    std::vector<int> labels_;
};

/// Component pattern tags, in matching precedence order.
struct ComponentShape {
    enum Tag {
        IsolatedVertex,
        P2,
        CompleteK,         // a = k
        CycleC,            // a = k
        CompleteBipartite, // parts a <= b
        CoronaHK1,
        Other,
    };
    Tag tag = Other;
    int a = 0;
    int b = 0;

    bool operator==(const ComponentShape& o) const = default;
};

std::string to_string(const ComponentShape& s);

/// The commuting graph of a non-commutative ring: vertices are the
/// non-central elements in increasing element order, with an edge between
/// distinct a, b iff ab = ba. Vertex labels are the element indices.
/// Throws EmptyVertexSet if r is commutative.
SimpleGraph commuting_graph(const FiniteRing& r);

SimpleGraph complement(const SimpleGraph& g);

/// Max pairwise BFS distance; nullopt when disconnected.
/// Throws TooSmall on fewer than 2 vertices.
std::optional<int> diameter(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Connected components as vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g);

/// Subgraph induced on the given vertices, relabelled 0..k-1 in input order.
SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& verts);

/// Classifies one connected component of g against the pattern glossary.
/// A 2-vertex component reports P2 (rather than CompleteK(2), K_{1,1} or
/// K_1 corona K_1, which all coincide with it).
ComponentShape classify_component(const SimpleGraph& g,
                                  const std::vector<int>& comp);

/// Part sizes (a <= b, both >= 1) iff g is a complete bipartite graph on
/// its whole vertex set.
std::optional<std::pair<int, int>> is_complete_bipartite(const SimpleGraph& g);

/// Strong product: vertices V(G) x V(H) in row-major order; (v,v') ~ (u,u')
/// iff each coordinate is equal or adjacent, and the pairs differ.
/// Throws OverflowGuard when the product exceeds max_vertices.
SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h,
                           int max_vertices = 4096);

/// Isomorphism test by backtracking with degree-class pruning.
/// Throws TooLarge above 32 vertices.
bool graph_iso_small(const SimpleGraph& g, const SimpleGraph& h);

// small builders, used by checks and tests
SimpleGraph complete_graph(int m);
SimpleGraph cycle_graph(int m);
SimpleGraph path_graph(int m);
SimpleGraph empty_graph(int m);

}  // namespace commring

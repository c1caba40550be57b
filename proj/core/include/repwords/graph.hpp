#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace repwords {

// Simple undirected graph on vertex set {1..n}. Labels ARE the vertices:
// relabeling is a permutation of {1..n}, handled explicitly by callers.
// Value type; treat shared instances as immutable.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);
    static LabeledGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    bool edge(int i, int j) const;        // 1-based, symmetric; edge(i,i) is false
    void add_edge(int i, int j);          // i != j
    void remove_edge(int i, int j);

    int degree(int i) const;
    bool isolated(int i) const { return degree(i) == 0; }
    std::vector<std::pair<int, int>> edges() const;  // sorted, i < j
    int edge_count() const;

    // smallest/largest neighbor of i below/above i; 0 if none
    int smallest_neighbor_below(int i) const;
    int largest_neighbor_above(int i) const;
    int smallest_nonneighbor_below(int i) const;

    LabeledGraph complement() const;
    LabeledGraph supplement() const;      // relabel i -> n+1-i
    // perm[i-1] = new label of vertex i; perm is a bijection on {1..n}
    LabeledGraph relabel(const std::vector<int>& perm) const;
    // induced subgraph on verts (ascending labels), relabeled order-isomorphically to {1..k}
    LabeledGraph induced(const std::vector<int>& verts) const;

    // upper-triangle bitmask in (i,j) lexicographic order; needs n <= 11
    std::uint64_t adjacency_key() const;

    bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<std::uint64_t> adj_;  // adj_[i-1] bit (j-1): edge ij
};

}  // namespace repwords

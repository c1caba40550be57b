#include "repwords/graph.hpp"

#include <bit>
#include <stdexcept>

namespace repwords {

LabeledGraph::LabeledGraph(int n) : n_(n) {
    if (n < 0 || n > 62) throw std::invalid_argument("LabeledGraph: n must be in 0..62");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

LabeledGraph LabeledGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    LabeledGraph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

static void check_vertex(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("vertex label out of range");
}

bool LabeledGraph::edge(int i, int j) const {
    check_vertex(n_, i);
    check_vertex(n_, j);
    if (i == j) return false;
    return (adj_[i - 1] >> (j - 1)) & 1u;
}

void LabeledGraph::add_edge(int i, int j) {
    check_vertex(n_, i);
    check_vertex(n_, j);
    if (i == j) throw std::invalid_argument("self-loop");
    adj_[i - 1] |= std::uint64_t{1} << (j - 1);
    adj_[j - 1] |= std::uint64_t{1} << (i - 1);
}

void LabeledGraph::remove_edge(int i, int j) {
    check_vertex(n_, i);
    check_vertex(n_, j);
    adj_[i - 1] &= ~(std::uint64_t{1} << (j - 1));
    adj_[j - 1] &= ~(std::uint64_t{1} << (i - 1));
}

int LabeledGraph::degree(int i) const {
    check_vertex(n_, i);
    return std::popcount(adj_[i - 1]);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (edge(i, j)) out.emplace_back(i, j);
    return out;
}

int LabeledGraph::edge_count() const {
    int total = 0;
    for (auto m : adj_) total += std::popcount(m);
    return total / 2;
}

int LabeledGraph::smallest_neighbor_below(int i) const {
    check_vertex(n_, i);
    std::uint64_t below = adj_[i - 1] & ((std::uint64_t{1} << (i - 1)) - 1);
    return below ? std::countr_zero(below) + 1 : 0;
}

int LabeledGraph::largest_neighbor_above(int i) const {
    check_vertex(n_, i);
    std::uint64_t above = adj_[i - 1] >> i;  // bits for labels > i
    return above ? i + 64 - std::countl_zero(above) : 0;
}

int LabeledGraph::smallest_nonneighbor_below(int i) const {
    check_vertex(n_, i);
    std::uint64_t below = ~adj_[i - 1] & ((std::uint64_t{1} << (i - 1)) - 1);
    return below ? std::countr_zero(below) + 1 : 0;
}

LabeledGraph LabeledGraph::complement() const {
    LabeledGraph g(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (!edge(i, j)) g.add_edge(i, j);
    return g;
}

LabeledGraph LabeledGraph::supplement() const {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (int i = 1; i <= n_; ++i) perm[i - 1] = n_ + 1 - i;
    return relabel(perm);
}

LabeledGraph LabeledGraph::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
    LabeledGraph g(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (edge(i, j)) g.add_edge(perm[i - 1], perm[j - 1]);
    return g;
}

LabeledGraph LabeledGraph::induced(const std::vector<int>& verts) const {
    for (std::size_t k = 1; k < verts.size(); ++k)
        if (verts[k - 1] >= verts[k]) throw std::invalid_argument("induced: labels must ascend");
    LabeledGraph g(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (edge(verts[a], verts[b])) g.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return g;
}

std::uint64_t LabeledGraph::adjacency_key() const {
    if (n_ > 11) throw std::invalid_argument("adjacency_key: n must be <= 11");
    std::uint64_t key = 0;
    int bit = 0;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j, ++bit)
            if (edge(i, j)) key |= std::uint64_t{1} << bit;
    return key;
}

}  // namespace repwords

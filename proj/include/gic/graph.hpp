#pragma once

#include "gic/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace gic {

/// Simple undirected graph with stable vertex labels.
///
/// Labels are distinct non-negative integers and survive every subgraph
/// operation verbatim: deleting vertex 3 from {0..7} leaves labels
/// {0,1,2,4,5,6,7}. Vertex iteration order is always ascending label.
/// Instances are immutable after construction; every operation returns a
/// new graph.
class Graph {
public:
    Graph() = default;

    /// Labels 0..n-1 with the given edges, symmetrized; duplicates collapse.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    /// Edge (i,j) iff d[i][j] == 1. Entries other than 0/1 are accepted and
    /// not validated against shortest paths; they are re-derivable through
    /// distance_matrix().
    static Graph from_distance_matrix(const IntMatrix& d);

    std::size_t order() const { return labels_.size(); }
    std::size_t edge_count() const;
    const std::vector<int>& labels() const { return labels_; }
    bool has_vertex(int u) const;

    bool adjacent(int u, int v) const;
    int degree(int u) const;
    std::vector<int> neighborhood(int u) const;
    std::vector<int> closed_neighborhood(int u) const;

    /// Union of the neighborhoods of all vertices in s, plus s itself when
    /// closed is set.
    std::vector<int> set_neighborhood(const std::vector<int>& s, bool closed) const;

    Graph delete_vertex(int u) const;
    Graph induced_subgraph(const std::vector<int>& s) const;
    Graph remaining_subgraph(const std::vector<int>& s) const;

    /// Edges as label pairs (u,v), u < v, in ascending order.
    std::vector<std::pair<int, int>> edges() const;

    /// 0/1 symmetric matrix in label order.
    IntMatrix adjacency_matrix() const;

    /// All-pairs shortest-path hop counts by breadth-first traversal.
    /// Unreachable pairs get the sentinel |V|, which strictly exceeds any
    /// true distance and is invariant under relabeling.
    IntMatrix distance_matrix() const;

    bool operator==(const Graph&) const = default;

private:
    Graph(std::vector<int> labels, std::vector<unsigned char> adj)
        : labels_(std::move(labels)), adj_(std::move(adj)) {}

    std::size_t index_of(int label) const; // throws on unknown label
    bool adj_at(std::size_t i, std::size_t j) const { return adj_[i * labels_.size() + j] != 0; }

    std::vector<int> labels_;        // ascending
    std::vector<unsigned char> adj_; // order x order, by position
};

} // namespace gic

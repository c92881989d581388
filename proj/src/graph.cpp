#include "gic/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace gic {
namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels[static_cast<std::size_t>(i)] = i;
    std::vector<unsigned char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge label out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj[static_cast<std::size_t>(u) * n + v] = 1;
        adj[static_cast<std::size_t>(v) * n + u] = 1;
    }
    return Graph(std::move(labels), std::move(adj));
}

Graph Graph::from_distance_matrix(const IntMatrix& d) {
    const std::size_t n = d.order();
    if (!d.symmetric())
        throw std::invalid_argument("distance matrix is not symmetric");
    if (!d.zero_diagonal())
        throw std::invalid_argument("distance matrix has a nonzero diagonal");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (d.at(i, j) < 0)
                throw std::invalid_argument("distance matrix has a negative entry");
            if (d.at(i, j) == 1)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return from_edge_list(static_cast<int>(n), edges);
}

std::size_t Graph::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex label " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::has_vertex(int u) const {
    return std::binary_search(labels_.begin(), labels_.end(), u);
}

bool Graph::adjacent(int u, int v) const {
    return adj_at(index_of(u), index_of(v));
}

int Graph::degree(int u) const {
    const std::size_t n = labels_.size();
    const std::size_t i = index_of(u);
    int d = 0;
    for (std::size_t j = 0; j < n; ++j)
        d += adj_[i * n + j] != 0;
    return d;
}

std::size_t Graph::edge_count() const {
    const std::size_t n = labels_.size();
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            m += adj_[i * n + j] != 0;
    return m;
}

std::vector<int> Graph::neighborhood(int u) const {
    const std::size_t n = labels_.size();
    const std::size_t i = index_of(u);
    std::vector<int> out;
    for (std::size_t j = 0; j < n; ++j)
        if (adj_[i * n + j])
            out.push_back(labels_[j]);
    return out;
}

std::vector<int> Graph::closed_neighborhood(int u) const {
    std::vector<int> out = neighborhood(u);
    out.push_back(u);
    return sorted_unique(std::move(out));
}

std::vector<int> Graph::set_neighborhood(const std::vector<int>& s, bool closed) const {
    const std::size_t n = labels_.size();
    std::vector<unsigned char> mark(n, 0);
    for (int u : s) {
        const std::size_t i = index_of(u);
        for (std::size_t j = 0; j < n; ++j)
            if (adj_[i * n + j])
                mark[j] = 1;
        if (closed)
            mark[i] = 1;
    }
    std::vector<int> out;
    for (std::size_t j = 0; j < n; ++j)
        if (mark[j])
            out.push_back(labels_[j]);
    return out;
}

Graph Graph::induced_subgraph(const std::vector<int>& s) const {
    const std::size_t n = labels_.size();
    std::vector<std::size_t> keep;
    for (int u : sorted_unique(s))
        keep.push_back(index_of(u));
    const std::size_t k = keep.size();
    std::vector<int> labels(k);
    std::vector<unsigned char> adj(k * k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        labels[a] = labels_[keep[a]];
        for (std::size_t b = 0; b < k; ++b)
            adj[a * k + b] = adj_[keep[a] * n + keep[b]];
    }
    return Graph(std::move(labels), std::move(adj));
}

Graph Graph::remaining_subgraph(const std::vector<int>& s) const {
    std::vector<int> drop = sorted_unique(s);
    for (int u : drop)
        index_of(u); // validate
    std::vector<int> rest;
    std::set_difference(labels_.begin(), labels_.end(), drop.begin(), drop.end(),
                        std::back_inserter(rest));
    return induced_subgraph(rest);
}

Graph Graph::delete_vertex(int u) const {
    index_of(u); // validate
    return remaining_subgraph({u});
}

std::vector<std::pair<int, int>> Graph::edges() const {
    const std::size_t n = labels_.size();
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj_[i * n + j])
                out.emplace_back(labels_[i], labels_[j]);
    return out;
}

IntMatrix Graph::adjacency_matrix() const {
    const std::size_t n = labels_.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (adj_[i * n + j])
                m.at(i, j) = 1;
    return m;
}

IntMatrix Graph::distance_matrix() const {
    const std::size_t n = labels_.size();
    IntMatrix m(n);
    const Int sentinel = n;
    std::vector<int> dist(n);
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y = 0; y < n; ++y)
                if (adj_[x * n + y] && dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (std::size_t j = 0; j < n; ++j)
            m.at(s, j) = dist[j] < 0 ? sentinel : Int(dist[j]);
    }
    return m;
}

} // namespace gic

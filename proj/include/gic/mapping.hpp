#pragma once

#include "gic/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gic {

/// Growing injective vertex mapping between two fixed original graphs.
/// Every accepted pair keeps the mapping edge-consistent against the
/// originals: for all mapped x, (x,u) is an edge of G1 iff (f(x),f(u)) is
/// an edge of G2. push() enforces this.
class PartialMapping {
public:
    PartialMapping(const Graph& g1, const Graph& g2) : g1_(&g1), g2_(&g2) {}

    const Graph& source() const { return *g1_; }
    const Graph& target() const { return *g2_; }

    std::size_t size() const { return pairs_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    bool maps(int u) const;
    bool hits(int v) const;
    std::optional<int> image(int u) const;

    /// First mapped x for which adding (u,v) would break edge consistency,
    /// with the direction of the disagreement; nullopt when (u,v) is safe.
    struct EdgeConflict {
        int x;
        int fx;
        bool edge_in_source; // (x,u) in E(G1); the image pair disagrees
    };
    std::optional<EdgeConflict> edge_conflict(int u, int v) const;

    void push(int u, int v); // throws std::invalid_argument on any violation
    void pop();

private:
    const Graph* g1_;
    const Graph* g2_;
    std::vector<std::pair<int, int>> pairs_;
};

} // namespace gic

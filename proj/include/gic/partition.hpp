#pragma once

#include "gic/criteria.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gic {

struct Block {
    std::string key;          // signature shared by every member
    std::vector<int> members; // ascending labels
};

/// Vertex partition: non-empty pairwise-disjoint blocks covering the vertex
/// set, each block holding exactly the vertices that share its key. Blocks
/// are kept in canonical (sorted-key) order.
struct Partition {
    std::vector<Block> blocks;

    std::vector<int> vertices() const; // union of all blocks, sorted
    bool valid_over(const Graph& g) const;
};

/// u and v share a block iff c(G-u) = c(G-v).
Partition base_partition(const Graph& g, const Criterion& c);

/// Splits each base block by the signature pair of the two pieces the
/// neighborhood of u cuts out of G: c(G[N*(u)]) and c(G - N*(u)), where
/// N* is the closed or open neighborhood. The result always refines base.
Partition subdivide_partition(const Graph& g, const Partition& base, const Criterion& c,
                              bool closed_neighborhood = true);

/// True iff every block of p is a subset of some block of q.
bool refines(const Partition& p, const Partition& q);

struct BlockPair {
    std::string key;
    std::vector<int> left;
    std::vector<int> right;
};

/// Blocks of two per-graph partitions joined by equal key. An unmatched key
/// or a matched pair of different sizes is an incompatibility, which for
/// invariant signatures certifies non-isomorphism.
struct Alignment {
    std::vector<BlockPair> pairs;
    std::optional<std::string> incompatibility;

    bool compatible() const { return !incompatibility.has_value(); }
};

Alignment align_partitions(const Partition& p1, const Partition& p2);

/// Product over pairs of (block size)!; the number of bijections a search
/// restricted to the aligned blocks can still consider.
Int search_space_size(const std::vector<BlockPair>& pairs);

/// Product of |block|! over one partition (the factor the partition alone
/// contributes, i.e. the size of its self-alignment space).
Int search_space_factor(const Partition& p);

} // namespace gic

#include "gic/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gic {
namespace {

Partition from_key_map(std::map<std::string, std::vector<int>>&& groups) {
    Partition p;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end());
        p.blocks.push_back({key, std::move(members)});
    }
    return p; // std::map iteration already gives canonical key order
}

Int factorial(std::size_t n) {
    Int f = 1;
    for (std::size_t k = 2; k <= n; ++k)
        f *= static_cast<unsigned>(k);
    return f;
}

} // namespace

std::vector<int> Partition::vertices() const {
    std::vector<int> all;
    for (const Block& b : blocks)
        all.insert(all.end(), b.members.begin(), b.members.end());
    std::sort(all.begin(), all.end());
    return all;
}

bool Partition::valid_over(const Graph& g) const {
    std::vector<int> all;
    for (const Block& b : blocks) {
        if (b.members.empty())
            return false;
        all.insert(all.end(), b.members.begin(), b.members.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false; // overlap
    return all == g.labels();
}

Partition base_partition(const Graph& g, const Criterion& c) {
    std::map<std::string, std::vector<int>> groups;
    for (int u : g.labels())
        groups[per_vertex_signature(g, c, u).key()].push_back(u);
    return from_key_map(std::move(groups));
}

Partition subdivide_partition(const Graph& g, const Partition& base, const Criterion& c,
                              bool closed_neighborhood) {
    if (!base.valid_over(g))
        throw std::invalid_argument("base is not a valid partition of the graph's vertex set");
    std::map<std::string, std::vector<int>> groups;
    for (const Block& b : base.blocks) {
        for (int u : b.members) {
            const std::vector<int> hood = g.set_neighborhood({u}, closed_neighborhood);
            const CriterionValue zi = c.evaluate(g.induced_subgraph(hood));
            const CriterionValue zr = c.evaluate(g.remaining_subgraph(hood));
            groups[b.key + "|" + zi.payload + "|" + zr.payload].push_back(u);
        }
    }
    return from_key_map(std::move(groups));
}

bool refines(const Partition& p, const Partition& q) {
    if (p.vertices() != q.vertices())
        throw std::invalid_argument("partitions cover different vertex sets");
    std::map<int, std::size_t> block_of;
    for (std::size_t i = 0; i < q.blocks.size(); ++i)
        for (int v : q.blocks[i].members)
            block_of[v] = i;
    for (const Block& b : p.blocks) {
        if (b.members.empty())
            continue;
        const std::size_t home = block_of.at(b.members.front());
        for (int v : b.members)
            if (block_of.at(v) != home)
                return false;
    }
    return true;
}

Alignment align_partitions(const Partition& p1, const Partition& p2) {
    Alignment out;
    std::size_t i = 0, j = 0;
    while (i < p1.blocks.size() && j < p2.blocks.size()) {
        const Block& a = p1.blocks[i];
        const Block& b = p2.blocks[j];
        if (a.key != b.key) {
            out.incompatibility = a.key < b.key
                                      ? "block key present only in the first partition"
                                      : "block key present only in the second partition";
            out.pairs.clear();
            return out;
        }
        if (a.members.size() != b.members.size()) {
            out.incompatibility = "paired blocks have different sizes (" +
                                  std::to_string(a.members.size()) + " vs " +
                                  std::to_string(b.members.size()) + ")";
            out.pairs.clear();
            return out;
        }
        out.pairs.push_back({a.key, a.members, b.members});
        ++i;
        ++j;
    }
    if (i < p1.blocks.size() || j < p2.blocks.size()) {
        out.incompatibility = i < p1.blocks.size()
                                  ? "block key present only in the first partition"
                                  : "block key present only in the second partition";
        out.pairs.clear();
    }
    return out;
}

Int search_space_size(const std::vector<BlockPair>& pairs) {
    Int total = 1;
    for (const BlockPair& p : pairs) {
        if (p.left.size() != p.right.size())
            throw std::invalid_argument("aligned block pair has unequal sizes");
        total *= factorial(p.left.size());
    }
    return total;
}

Int search_space_factor(const Partition& p) {
    Int total = 1;
    for (const Block& b : p.blocks)
        total *= factorial(b.members.size());
    return total;
}

} // namespace gic

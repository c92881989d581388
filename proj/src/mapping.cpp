#include "gic/mapping.hpp"

#include <stdexcept>
#include <string>

namespace gic {

bool PartialMapping::maps(int u) const {
    for (const auto& [a, b] : pairs_)
        if (a == u)
            return true;
    return false;
}

bool PartialMapping::hits(int v) const {
    for (const auto& [a, b] : pairs_)
        if (b == v)
            return true;
    return false;
}

std::optional<int> PartialMapping::image(int u) const {
    for (const auto& [a, b] : pairs_)
        if (a == u)
            return b;
    return std::nullopt;
}

std::optional<PartialMapping::EdgeConflict> PartialMapping::edge_conflict(int u, int v) const {
    for (const auto& [x, fx] : pairs_) {
        const bool e1 = g1_->adjacent(x, u);
        const bool e2 = g2_->adjacent(fx, v);
        if (e1 != e2)
            return EdgeConflict{x, fx, e1};
    }
    return std::nullopt;
}

void PartialMapping::push(int u, int v) {
    if (!g1_->has_vertex(u) || !g2_->has_vertex(v))
        throw std::invalid_argument("mapping pair uses an unknown label");
    if (maps(u) || hits(v))
        throw std::invalid_argument("mapping pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") breaks injectivity");
    if (edge_conflict(u, v))
        throw std::invalid_argument("mapping pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") breaks edge consistency");
    pairs_.emplace_back(u, v);
}

void PartialMapping::pop() {
    if (pairs_.empty())
        throw std::logic_error("pop on empty mapping");
    pairs_.pop_back();
}

} // namespace gic

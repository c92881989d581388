#pragma once

#include "gic/criteria.hpp"
#include "gic/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gic {

/// Brute-force ground truth for small graphs. Factorial growth is the only
/// reason for the caps; exceeding one throws ResourceLimitError.
namespace oracle {

constexpr std::size_t default_exhaustive_cap = 10;
constexpr std::size_t default_anchored_cap = 12;

/// First bijection (in lexicographic label order, pruned incrementally)
/// that maps edges to edges and non-edges to non-edges; nullopt when none.
std::optional<std::vector<std::pair<int, int>>>
exhaustive_isomorphic(const Graph& g1, const Graph& g2,
                      std::size_t cap = default_exhaustive_cap);

/// True iff an isomorphism g1 -> g2 exists that maps every anchor u to its v.
/// Reuses the exhaustive engine with the anchored positions pinned.
bool anchored_isomorphic(const Graph& g1, const Graph& g2,
                         const std::vector<std::pair<int, int>>& anchors,
                         std::size_t cap = default_anchored_cap);

/// Lexicographically minimal adjacency bit string over all vertex orderings.
/// Equal on two graphs iff they are isomorphic, which makes this a genuine
/// sufficient-and-necessary criterion at small scale.
CriterionValue canonical_form(const Graph& g, std::size_t cap = default_exhaustive_cap);

/// canonical_form wrapped as a registered-style criterion named "canon".
Criterion canonical_form_criterion(std::size_t cap = default_exhaustive_cap);

/// Plain edge-by-edge check that pairs is a bijection between the two label
/// sets mapping edges to edges and non-edges to non-edges.
bool is_isomorphism(const Graph& g1, const Graph& g2,
                    const std::vector<std::pair<int, int>>& pairs);

} // namespace oracle
} // namespace gic

#pragma once

#include "gic/graph.hpp"
#include "gic/polynomial.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace gic {

/// Canonically encoded value of an isomorphism criterion. Two values compare
/// equal iff the tags match and the payloads are identical; payloads never
/// depend on vertex labeling.
struct CriterionValue {
    std::string tag;
    std::string payload;

    bool operator==(const CriterionValue&) const = default;
    auto operator<=>(const CriterionValue&) const = default;

    /// Key string for partition blocks and alignment joins.
    std::string key() const { return tag + "|" + payload; }
};

/// A named pure function Graph -> CriterionValue.
class Criterion {
public:
    using Evaluator = std::function<CriterionValue(const Graph&)>;

    Criterion(std::string name, Evaluator eval)
        : name_(std::move(name)), eval_(std::move(eval)) {}

    const std::string& name() const { return name_; }
    CriterionValue evaluate(const Graph& g) const { return eval_(g); }

private:
    std::string name_;
    Evaluator eval_;
};

/// Degrees sorted ascending.
CriterionValue degree_sequence(const Graph& g);

/// For each vertex the sorted list of its neighbors' degrees; the whole
/// collection canonicalized as a sorted multiset of lists.
CriterionValue adjacent_degree_sequences(const Graph& g);

CriterionValue adjacency_char_poly(const Graph& g);
CriterionValue distance_char_poly(const Graph& g);

/// c evaluated on the vertex-deleted subgraph G - u.
CriterionValue per_vertex_signature(const Graph& g, const Criterion& c, int u);

/// The registered criteria: degree, adj-degrees, adj-charpoly, dist-charpoly.
const std::vector<Criterion>& builtin_criteria();

/// Lookup by name; nullptr when unknown.
const Criterion* find_criterion(std::string_view name);

} // namespace gic

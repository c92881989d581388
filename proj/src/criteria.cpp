#include "gic/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace gic {
namespace {

std::string encode_sequence(const std::vector<int>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out << ' ';
        out << xs[i];
    }
    return out.str();
}

} // namespace

CriterionValue degree_sequence(const Graph& g) {
    std::vector<int> degrees;
    degrees.reserve(g.order());
    for (int u : g.labels())
        degrees.push_back(g.degree(u));
    std::sort(degrees.begin(), degrees.end());
    return {"degree", encode_sequence(degrees)};
}

CriterionValue adjacent_degree_sequences(const Graph& g) {
    std::vector<std::vector<int>> rows;
    rows.reserve(g.order());
    for (int u : g.labels()) {
        std::vector<int> row;
        for (int w : g.neighborhood(u))
            row.push_back(g.degree(w));
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end()); // lexicographic multiset order
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            out << ' ';
        out << '[' << encode_sequence(rows[i]) << ']';
    }
    return {"adj-degrees", out.str()};
}

CriterionValue adjacency_char_poly(const Graph& g) {
    return {"adj-charpoly", char_poly(g.adjacency_matrix()).str()};
}

CriterionValue distance_char_poly(const Graph& g) {
    return {"dist-charpoly", char_poly(g.distance_matrix()).str()};
}

CriterionValue per_vertex_signature(const Graph& g, const Criterion& c, int u) {
    return c.evaluate(g.delete_vertex(u));
}

const std::vector<Criterion>& builtin_criteria() {
    static const std::vector<Criterion> criteria = {
        Criterion("degree", degree_sequence),
        Criterion("adj-degrees", adjacent_degree_sequences),
        Criterion("adj-charpoly", adjacency_char_poly),
        Criterion("dist-charpoly", distance_char_poly),
    };
    return criteria;
}

const Criterion* find_criterion(std::string_view name) {
    for (const Criterion& c : builtin_criteria())
        if (c.name() == name)
            return &c;
    return nullptr;
}

} // namespace gic

#pragma once

#include "gic/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gic {

/// "n m" header line, then m lines "u v" with 0-based labels.
/// Duplicate edges collapse; a note per duplicate is appended to warnings
/// when a sink is given.
Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// n lines of n integers; must be symmetric with zero diagonal.
Graph parse_distance_matrix(std::string_view text);

/// One line per vertex: row k lists the 0-based neighbors of vertex k,
/// separated by commas or spaces, with an optional trailing ';' or '.'.
/// Symmetry is validated: i listing j requires j listing i.
Graph parse_adjacency_lists(std::string_view text);

/// Format names: "edge-list", "distance-matrix", "adjacency-lists", or
/// "auto", which tries the three in that order.
Graph parse_graph(std::string_view text, std::string_view format = "auto");

/// Serializers require labels 0..n-1 (true of every parsed graph).
std::string serialize_edge_list(const Graph& g);
std::string serialize_distance_matrix(const Graph& g);
std::string serialize_adjacency_lists(const Graph& g);

} // namespace gic

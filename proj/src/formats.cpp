#include "gic/formats.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gic {
namespace {

std::vector<std::string> nonblank_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back(line);
    }
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no,
                                  const char* extra_separators = "") {
    std::string cleaned = line;
    for (char& ch : cleaned)
        if (ch == '\r' || std::strchr(extra_separators, ch))
            ch = ' ';
    std::istringstream in(cleaned);
    std::vector<long long> out;
    long long x;
    while (in >> x)
        out.push_back(x);
    if (!in.eof()) {
        std::string tail;
        in.clear();
        in >> tail;
        throw ParseError("line " + std::to_string(line_no) + ": unexpected token '" + tail +
                         "'");
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
    const auto lines = nonblank_lines(text);
    if (lines.empty())
        throw ParseError("edge list: empty input");
    const auto header = parse_ints(lines[0], 1);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0)
        throw ParseError("edge list: header must be 'n m'");
    const long long n = header[0];
    const long long m = header[1];
    if (static_cast<long long>(lines.size()) != m + 1)
        throw ParseError("edge list: expected " + std::to_string(m) + " edge lines, got " +
                         std::to_string(lines.size() - 1));
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (long long i = 1; i <= m; ++i) {
        const auto pair = parse_ints(lines[static_cast<std::size_t>(i)], i + 1);
        if (pair.size() != 2)
            throw ParseError("line " + std::to_string(i + 1) + ": expected 'u v'");
        const long long u = pair[0], v = pair[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(i + 1) + ": label out of range 0.." +
                             std::to_string(n - 1));
        if (u == v)
            throw ParseError("line " + std::to_string(i + 1) + ": self-loop at " +
                             std::to_string(u));
        const auto key = std::minmax(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(key).second) {
            if (warnings)
                warnings->push_back("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") collapsed");
            continue;
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_distance_matrix(std::string_view text) {
    const auto lines = nonblank_lines(text);
    if (lines.empty())
        throw ParseError("distance matrix: empty input");
    const std::size_t n = lines.size();
    IntMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = parse_ints(lines[i], i + 1);
        if (row.size() != n)
            throw ParseError("distance matrix: line " + std::to_string(i + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            d.at(i, j) = row[j];
    }
    try {
        return Graph::from_distance_matrix(d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("distance matrix: ") + e.what());
    }
}

Graph parse_adjacency_lists(std::string_view text) {
    const auto lines = nonblank_lines(text);
    if (lines.empty())
        throw ParseError("adjacency lists: empty input");
    const std::size_t n = lines.size();
    std::vector<std::set<long long>> listed(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string row = lines[i];
        while (!row.empty() && (row.back() == ';' || row.back() == '.' || row.back() == ' ' ||
                                row.back() == '\t' || row.back() == '\r'))
            row.pop_back();
        for (long long j : parse_ints(row, i + 1, ",")) {
            if (j < 0 || j >= static_cast<long long>(n))
                throw ParseError("line " + std::to_string(i + 1) + ": label " +
                                 std::to_string(j) + " out of range 0.." +
                                 std::to_string(n - 1));
            if (j == static_cast<long long>(i))
                throw ParseError("line " + std::to_string(i + 1) + ": vertex " +
                                 std::to_string(i) + " lists itself");
            listed[i].insert(j);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (long long j : listed[i]) {
            if (!listed[static_cast<std::size_t>(j)].count(static_cast<long long>(i)))
                throw ParseError("asymmetric listing: vertex " + std::to_string(i) +
                                 " lists " + std::to_string(j) + " but not vice versa");
            if (static_cast<long long>(i) < j)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text, std::string_view format) {
    if (format == "edge-list")
        return parse_edge_list(text);
    if (format == "distance-matrix")
        return parse_distance_matrix(text);
    if (format == "adjacency-lists")
        return parse_adjacency_lists(text);
    if (format != "auto")
        throw std::invalid_argument("unknown graph format '" + std::string(format) + "'");
    std::string errors;
    for (const char* fmt : {"edge-list", "distance-matrix", "adjacency-lists"}) {
        try {
            return parse_graph(text, fmt);
        } catch (const ParseError& e) {
            errors += std::string("\n  ") + fmt + ": " + e.what();
        }
    }
    throw ParseError("input matches none of the supported formats:" + errors);
}

namespace {

void require_contiguous_labels(const Graph& g, const char* what) {
    const auto& ls = g.labels();
    for (std::size_t i = 0; i < ls.size(); ++i)
        if (ls[i] != static_cast<int>(i))
            throw std::invalid_argument(std::string(what) +
                                        ": labels must be 0..n-1 (relabel first)");
}

} // namespace

std::string serialize_edge_list(const Graph& g) {
    require_contiguous_labels(g, "edge list");
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges)
        out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_distance_matrix(const Graph& g) {
    require_contiguous_labels(g, "distance matrix");
    const IntMatrix d = g.distance_matrix();
    std::ostringstream out;
    for (std::size_t i = 0; i < d.order(); ++i) {
        for (std::size_t j = 0; j < d.order(); ++j) {
            if (j)
                out << ' ';
            out << d.at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_adjacency_lists(const Graph& g) {
    require_contiguous_labels(g, "adjacency lists");
    std::ostringstream out;
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
        const auto hood = g.neighborhood(static_cast<int>(i));
        for (std::size_t k = 0; k < hood.size(); ++k) {
            if (k)
                out << ", ";
            out << hood[k];
        }
        out << (i + 1 == n ? '.' : ';') << '\n';
    }
    return out.str();
}

} // namespace gic

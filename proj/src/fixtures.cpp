#include "gic/fixtures.hpp"

#include "gic/formats.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace gic {
namespace {

// Example 1: two isomorphic 8-vertex circulant graphs, given by their
// distance matrices. Their distance characteristic polynomials coincide,
// which makes the pair a refutation instance for that criterion.
constexpr std::string_view example1_g1_text =
    "0 1 1 2 2 2 1 1\n"
    "1 0 1 1 2 2 2 1\n"
    "1 1 0 1 1 2 2 2\n"
    "2 1 1 0 1 1 2 2\n"
    "2 2 1 1 0 1 1 2\n"
    "2 2 2 1 1 0 1 1\n"
    "1 2 2 2 1 1 0 1\n"
    "1 1 2 2 2 1 1 0\n";

constexpr std::string_view example1_g2_text =
    "0 2 1 1 2 1 1 2\n"
    "2 0 2 1 1 2 1 1\n"
    "1 2 0 2 1 1 2 1\n"
    "1 1 2 0 2 1 1 2\n"
    "2 1 1 2 0 2 1 1\n"
    "1 2 1 1 2 0 2 1\n"
    "1 1 2 1 1 2 0 2\n"
    "2 1 1 2 1 1 2 0\n";

// Two of the fifteen conference graphs on 25 vertices (strongly regular,
// v=25 k=12 lambda=5 mu=6): cospectral for both the adjacency and the
// distance characteristic polynomial, yet non-isomorphic. Row k lists the
// neighbors of vertex k-1.
constexpr std::string_view p25_01_text =
    "1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12;\n"
    "0, 2, 3, 4, 5, 6, 13, 14, 15, 16, 17, 18;\n"
    "0, 1, 3, 4, 5, 6, 19, 20, 21, 22, 23, 24;\n"
    "0, 1, 2, 7, 8, 9, 13, 14, 15, 19, 20, 21;\n"
    "0, 1, 2, 7, 10, 11, 13, 16, 17, 19, 22, 23;\n"
    "0, 1, 2, 8, 10, 12, 14, 16, 18, 20, 22, 24;\n"
    "0, 1, 2, 9, 11, 12, 15, 17, 18, 21, 23, 24;\n"
    "0, 3, 4, 8, 9, 10, 13, 15, 18, 22, 23, 24;\n"
    "0, 3, 5, 7, 9, 11, 14, 16, 17, 21, 22, 24;\n"
    "0, 3, 6, 7, 8, 12, 16, 17, 18, 19, 20, 23;\n"
    "0, 4, 5, 7, 11, 12, 13, 14, 18, 20, 21, 23;\n"
    "0, 4, 6, 8, 10, 12, 14, 15, 17, 19, 21, 22;\n"
    "0, 5, 6, 9, 10, 11, 13, 15, 16, 19, 20, 24;\n"
    "1, 3, 4, 7, 10, 12, 15, 16, 17, 20, 21, 24;\n"
    "1, 3, 5, 8, 10, 11, 15, 16, 18, 19, 21, 23;\n"
    "1, 3, 6, 7, 11, 12, 13, 14, 18, 19, 22, 24;\n"
    "1, 4, 5, 8, 9, 12, 13, 14, 17, 19, 23, 24;\n"
    "1, 4, 6, 8, 9, 11, 13, 16, 18, 20, 21, 22;\n"
    "1, 5, 6, 7, 9, 10, 14, 15, 17, 20, 22, 23;\n"
    "2, 3, 4, 9, 11, 12, 14, 15, 16, 20, 22, 23;\n"
    "2, 3, 5, 9, 10, 12, 13, 17, 18, 19, 21, 22;\n"
    "2, 3, 6, 8, 10, 11, 13, 14, 17, 20, 23, 24;\n"
    "2, 4, 5, 7, 8, 11, 15, 17, 18, 19, 20, 24;\n"
    "2, 4, 6, 7, 9, 10, 14, 16, 18, 19, 21, 24;\n"
    "2, 5, 6, 7, 8, 12, 13, 15, 16, 21, 22, 23.\n";

constexpr std::string_view p25_02_text =
    "1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12;\n"
    "0, 2, 3, 4, 5, 6, 13, 14, 15, 16, 17, 18;\n"
    "0, 1, 3, 4, 5, 6, 19, 20, 21, 22, 23, 24;\n"
    "0, 1, 2, 7, 8, 9, 13, 14, 15, 19, 20, 21;\n"
    "0, 1, 2, 7, 10, 11, 13, 16, 17, 19, 22, 23;\n"
    "0, 1, 2, 8, 10, 12, 14, 16, 18, 20, 22, 24;\n"
    "0, 1, 2, 9, 11, 12, 15, 17, 18, 21, 23, 24;\n"
    "0, 3, 4, 8, 9, 10, 13, 15, 18, 22, 23, 24;\n"
    "0, 3, 5, 7, 9, 12, 14, 16, 17, 21, 22, 23;\n"
    "0, 3, 6, 7, 8, 11, 16, 17, 18, 19, 20, 24;\n"
    "0, 4, 5, 7, 11, 12, 13, 14, 18, 19, 21, 24;\n"
    "0, 4, 6, 9, 10, 12, 14, 15, 16, 19, 20, 23;\n"
    "0, 5, 6, 8, 10, 11, 13, 15, 17, 20, 21, 22;\n"
    "1, 3, 4, 7, 10, 12, 15, 16, 17, 20, 21, 24;\n"
    "1, 3, 5, 8, 10, 11, 15, 16, 18, 19, 21, 23;\n"
    "1, 3, 6, 7, 11, 12, 13, 14, 18, 20, 22, 23;\n"
    "1, 4, 5, 8, 9, 11, 13, 14, 17, 20, 23, 24;\n"
    "1, 4, 6, 8, 9, 12, 13, 16, 18, 19, 21, 22;\n"
    "1, 5, 6, 7, 9, 10, 14, 15, 17, 19, 22, 24;\n"
    "2, 3, 4, 9, 10, 11, 14, 17, 18, 20, 21, 22;\n"
    "2, 3, 5, 9, 11, 12, 13, 15, 16, 19, 22, 24;\n"
    "2, 3, 6, 8, 10, 12, 13, 14, 17, 19, 23, 24;\n"
    "2, 4, 5, 7, 8, 12, 15, 17, 18, 19, 20, 23;\n"
    "2, 4, 6, 7, 8, 11, 14, 15, 16, 21, 22, 24;\n"
    "2, 5, 6, 7, 9, 10, 13, 16, 18, 20, 21, 23.\n";

constexpr std::array<Fixture, 4> fixtures = {{
    {"example1-g1", "distance-matrix", "8-vertex circulant graph C8(1,2), by distance matrix",
     example1_g1_text},
    {"example1-g2", "distance-matrix", "8-vertex circulant graph C8(2,3), by distance matrix",
     example1_g2_text},
    {"p25-01", "adjacency-lists", "conference graph P25.01, SRG(25,12,5,6)", p25_01_text},
    {"p25-02", "adjacency-lists", "conference graph P25.02, SRG(25,12,5,6)", p25_02_text},
}};

} // namespace

std::span<const Fixture> bundled_fixtures() { return fixtures; }

const Fixture* find_fixture(std::string_view name) {
    for (const Fixture& f : fixtures)
        if (f.name == name)
            return &f;
    return nullptr;
}

Graph load_fixture(std::string_view name) {
    const Fixture* f = find_fixture(name);
    if (!f)
        throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
    return parse_graph(f->text, f->format);
}

} // namespace gic

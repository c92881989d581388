#pragma once

#include "gic/graph.hpp"

#include <span>
#include <string_view>

namespace gic {

/// A graph bundled with the library; text is stored verbatim in the binary.
struct Fixture {
    std::string_view name;
    std::string_view format;
    std::string_view description;
    std::string_view text;
};

/// example1-g1, example1-g2 (the two cospectral circulant graphs given by
/// distance matrices), p25-01, p25-02 (conference graphs on 25 vertices
/// given by adjacency lists).
std::span<const Fixture> bundled_fixtures();

const Fixture* find_fixture(std::string_view name); // nullptr when unknown

Graph load_fixture(std::string_view name); // throws std::invalid_argument when unknown

} // namespace gic

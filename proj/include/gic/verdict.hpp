#pragma once

#include "gic/criteria.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gic {

struct SearchStats {
    std::uint64_t zeta_evals = 0;
    std::uint64_t dead_ends = 0;
    std::uint64_t backtracks = 0;
    std::uint64_t anchored_checks = 0;
    std::uint64_t anchored_skipped = 0;
    double elapsed_seconds = 0.0;
};

/// Filter stages of the pairing loops, identified by their conventional
/// step numbers. Rejection logs and explain_prune report these.
enum class FilterStep : int {
    accepted = 0,
    deleted_signature = 8,      // criterion mismatch on vertex-deleted working subgraphs
    edge_consistency = 9,       // edge disagreement with f against the originals
    neighborhood_signature = 11, // criterion mismatch on the induced/remaining split
    anchored_extension = 12,    // neighborhood subgraphs admit no isomorphism extending f
};

const char* filter_step_name(FilterStep step);

struct Rejection {
    int candidate;
    FilterStep step;
    std::string detail;
};

/// Three-way outcome of the verification and search procedures.
struct Verdict {
    enum class Kind { Isomorphic, NotIsomorphic, NotSufficientNecessary };

    Kind kind = Kind::NotIsomorphic;

    /// Full mapping for Isomorphic, witness prefix for NotSufficientNecessary,
    /// in acceptance order.
    std::vector<std::pair<int, int>> mapping;

    /// NotIsomorphic: the criterion mismatch or exhausted-search evidence.
    std::string evidence;

    /// NotSufficientNecessary: the vertex whose candidates were all rejected,
    /// with the per-candidate rejection log.
    std::optional<int> failing_vertex;
    std::vector<Rejection> rejections;

    SearchStats stats;
};

const char* verdict_kind_name(Verdict::Kind kind);

} // namespace gic

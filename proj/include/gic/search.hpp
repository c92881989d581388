#pragma once

#include "gic/criteria.hpp"
#include "gic/graph.hpp"
#include "gic/mapping.hpp"
#include "gic/verdict.hpp"

#include <cstddef>
#include <string>

namespace gic {

struct SearchOptions {
    /// Neighborhood convention for the induced/remaining split and the
    /// anchored check: closed N[.] (default) or open N(.).
    bool closed_neighborhood = true;

    /// Above this induced-neighborhood size the anchored-extension filter is
    /// skipped (counted in anchored_skipped); it is a pruning filter, never
    /// an acceptance shortcut, so skipping preserves soundness.
    std::size_t anchored_cap = 12;

    /// Restrict candidates to aligned subdivided-partition blocks computed
    /// once up front. Disable for A/B comparison.
    bool prealign = true;

    /// Wall-clock budget in seconds; <= 0 means unlimited. Exceeding it
    /// throws ResourceLimitError.
    double time_budget_seconds = 0.0;
};

/// Depth-first backtracking isomorphism search filtered by the criterion on
/// vertex-deleted working subgraphs (step 8), edge consistency against the
/// originals (step 9), the criterion on the induced/remaining neighborhood
/// split (step 11) and the anchored-extension check (step 12). The candidate
/// u is always the smallest unmapped G1 label; candidates v are scanned in
/// ascending label order within u's aligned block. When every v fails, the
/// most recent assignment is retracted and scanning resumes (full
/// backtracking). Deterministic: identical inputs and options give identical
/// verdicts, mappings and stats.
Verdict search_isomorphism(const Graph& g1, const Graph& g2, const Criterion& c,
                           const SearchOptions& options = {});

struct PruneResult {
    FilterStep step = FilterStep::accepted;
    std::string detail;

    bool accepted() const { return step == FilterStep::accepted; }
};

/// Runs the step 8/9/11/12 filter cascade for one candidate pair (u,v) on
/// top of the partial mapping f and reports the first failing step with the
/// compared values, or acceptance.
PruneResult explain_prune(const Graph& g1, const Graph& g2, const Criterion& c,
                          const PartialMapping& f, int u, int v,
                          const SearchOptions& options = {});

} // namespace gic

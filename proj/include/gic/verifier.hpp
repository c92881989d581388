#pragma once

#include "gic/criteria.hpp"
#include "gic/graph.hpp"
#include "gic/verdict.hpp"

namespace gic {

/// Backtrack-free greedy pairing that stress-tests a criterion claimed to be
/// sufficient and necessary.
///
/// When c(G1) != c(G2) the answer is NotIsomorphic. Otherwise vertices are
/// paired greedily: the smallest remaining G1 label u is matched against the
/// remaining G2 labels v in ascending order, a candidate being rejected when
/// the criterion differs on the vertex-deleted working subgraphs (step 8) or
/// when some already-mapped x breaks edge consistency against the ORIGINAL
/// graphs (step 9). Accepted pairs are deleted from the working subgraphs and
/// never retracted. If every candidate for some u is rejected even though
/// c(G1) = c(G2), the criterion cannot be sufficient and necessary; the
/// verdict carries the witness prefix, the failing vertex and the rejection
/// log. A completed pairing is reported as Isomorphic -- one run can refute
/// a criterion but never certify it.
Verdict verify_criterion(const Graph& g1, const Graph& g2, const Criterion& c);

} // namespace gic

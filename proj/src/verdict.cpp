#include "gic/verdict.hpp"

namespace gic {

const char* filter_step_name(FilterStep step) {
    switch (step) {
    case FilterStep::accepted: return "accepted";
    case FilterStep::deleted_signature: return "deleted-signature";
    case FilterStep::edge_consistency: return "edge-consistency";
    case FilterStep::neighborhood_signature: return "neighborhood-signature";
    case FilterStep::anchored_extension: return "anchored-extension";
    }
    return "unknown";
}

const char* verdict_kind_name(Verdict::Kind kind) {
    switch (kind) {
    case Verdict::Kind::Isomorphic: return "ISOMORPHIC";
    case Verdict::Kind::NotIsomorphic: return "NOT-ISOMORPHIC";
    case Verdict::Kind::NotSufficientNecessary: return "NOT-SUFFICIENT-NECESSARY";
    }
    return "unknown";
}

} // namespace gic

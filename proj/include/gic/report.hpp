#pragma once

#include "gic/partition.hpp"
#include "gic/verdict.hpp"

#include <string>

namespace gic {

/// "KEY: value" lines. Every line except elapsed-ms is deterministic for
/// fixed inputs.
std::string render_verdict(const Verdict& v, const std::string& criterion_name = "");

/// One "key-hash: {labels}" line per block, in canonical order, then the
/// search-space factor as a decimal string.
std::string render_partition(const Partition& p);

std::string render_criterion_value(const CriterionValue& v);

/// Machine-readable single-document forms of the same reports.
std::string verdict_json(const Verdict& v, const std::string& criterion_name = "");
std::string partition_json(const Partition& p);
std::string criterion_value_json(const CriterionValue& v);

/// 64-bit FNV-1a of a block key, 16 hex digits; stable across runs and
/// platforms.
std::string key_hash(const std::string& key);

} // namespace gic

#include "gic/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>

namespace gic {
namespace {

using nlohmann::json;

std::string format_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i)
            out << ", ";
        out << pairs[i].first << "->" << pairs[i].second;
    }
    return out.str();
}

std::string format_elapsed_ms(double seconds) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << seconds * 1000.0;
    return out.str();
}

void append_stats_lines(std::ostringstream& out, const SearchStats& s) {
    out << "zeta-evals: " << s.zeta_evals << '\n';
    out << "dead-ends: " << s.dead_ends << '\n';
    out << "backtracks: " << s.backtracks << '\n';
    out << "anchored-checks: " << s.anchored_checks << '\n';
    out << "anchored-skipped: " << s.anchored_skipped << '\n';
    out << "elapsed-ms: " << format_elapsed_ms(s.elapsed_seconds) << '\n';
}

json stats_json(const SearchStats& s) {
    return json{{"zeta_evals", s.zeta_evals},
                {"dead_ends", s.dead_ends},
                {"backtracks", s.backtracks},
                {"anchored_checks", s.anchored_checks},
                {"anchored_skipped", s.anchored_skipped},
                {"elapsed_ms", s.elapsed_seconds * 1000.0}};
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json arr = json::array();
    for (const auto& [u, v] : pairs)
        arr.push_back(json::array({u, v}));
    return arr;
}

} // namespace

std::string key_hash(const std::string& key) {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

std::string render_verdict(const Verdict& v, const std::string& criterion_name) {
    std::ostringstream out;
    out << "verdict: " << verdict_kind_name(v.kind) << '\n';
    if (!criterion_name.empty())
        out << "criterion: " << criterion_name << '\n';
    switch (v.kind) {
    case Verdict::Kind::Isomorphic:
        out << "mapping: " << format_pairs(v.mapping) << '\n';
        break;
    case Verdict::Kind::NotIsomorphic:
        out << "evidence: " << v.evidence << '\n';
        break;
    case Verdict::Kind::NotSufficientNecessary:
        out << "witness-prefix: " << format_pairs(v.mapping) << '\n';
        if (v.failing_vertex)
            out << "failing-vertex: " << *v.failing_vertex << '\n';
        for (const Rejection& r : v.rejections)
            out << "rejection: candidate " << r.candidate << " | step "
                << static_cast<int>(r.step) << " (" << filter_step_name(r.step) << ") | "
                << r.detail << '\n';
        break;
    }
    append_stats_lines(out, v.stats);
    return out.str();
}

std::string verdict_json(const Verdict& v, const std::string& criterion_name) {
    json doc;
    doc["verdict"] = verdict_kind_name(v.kind);
    if (!criterion_name.empty())
        doc["criterion"] = criterion_name;
    switch (v.kind) {
    case Verdict::Kind::Isomorphic:
        doc["mapping"] = pairs_json(v.mapping);
        break;
    case Verdict::Kind::NotIsomorphic:
        doc["evidence"] = v.evidence;
        break;
    case Verdict::Kind::NotSufficientNecessary: {
        doc["witness_prefix"] = pairs_json(v.mapping);
        if (v.failing_vertex)
            doc["failing_vertex"] = *v.failing_vertex;
        json rej = json::array();
        for (const Rejection& r : v.rejections)
            rej.push_back(json{{"candidate", r.candidate},
                               {"step", static_cast<int>(r.step)},
                               {"step_name", filter_step_name(r.step)},
                               {"detail", r.detail}});
        doc["rejections"] = rej;
        break;
    }
    }
    doc["stats"] = stats_json(v.stats);
    return doc.dump(2) + "\n";
}

std::string render_partition(const Partition& p) {
    std::ostringstream out;
    for (const Block& b : p.blocks) {
        out << key_hash(b.key) << ": {";
        for (std::size_t i = 0; i < b.members.size(); ++i) {
            if (i)
                out << ", ";
            out << b.members[i];
        }
        out << "}\n";
    }
    out << "blocks: " << p.blocks.size() << '\n';
    out << "search-space-factor: " << search_space_factor(p).str() << '\n';
    return out.str();
}

std::string partition_json(const Partition& p) {
    json blocks = json::array();
    for (const Block& b : p.blocks)
        blocks.push_back(json{{"key_hash", key_hash(b.key)}, {"members", b.members}});
    json doc{{"blocks", blocks},
             {"block_count", p.blocks.size()},
             {"search_space_factor", search_space_factor(p).str()}};
    return doc.dump(2) + "\n";
}

std::string render_criterion_value(const CriterionValue& v) {
    return "criterion: " + v.tag + "\nvalue: " + v.payload + "\n";
}

std::string criterion_value_json(const CriterionValue& v) {
    return json{{"criterion", v.tag}, {"value", v.payload}}.dump(2) + "\n";
}

} // namespace gic

#include "gic/gic.h"

#include "gic/criteria.hpp"
#include "gic/errors.hpp"
#include "gic/fixtures.hpp"
#include "gic/formats.hpp"
#include "gic/oracle.hpp"
#include "gic/report.hpp"
#include "gic/search.hpp"
#include "gic/verifier.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

struct gic_graph {
    gic::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gic_status fail(gic_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs fn, mapping exceptions onto status codes. fn returns the report text.
template <typename Fn>
gic_status run(char** out, Fn&& fn) {
    if (!out)
        return fail(GIC_ERR_INVALID, "null output pointer");
    *out = nullptr;
    try {
        *out = dup_string(fn());
        return *out ? GIC_OK : fail(GIC_ERR_INVALID, "allocation failure");
    } catch (const gic::ParseError& e) {
        return fail(GIC_ERR_PARSE, e.what());
    } catch (const gic::ResourceLimitError& e) {
        return fail(GIC_ERR_LIMIT, e.what());
    } catch (const std::exception& e) {
        return fail(GIC_ERR_INVALID, e.what());
    }
}

const gic::Criterion& criterion_or_throw(const char* name) {
    if (!name)
        throw std::invalid_argument("null criterion name");
    const gic::Criterion* c = gic::find_criterion(name);
    if (!c)
        throw std::invalid_argument("unknown criterion '" + std::string(name) +
                                    "' (try: degree, adj-degrees, adj-charpoly, dist-charpoly)");
    return *c;
}

const gic::Graph& graph_or_throw(const gic_graph* g) {
    if (!g)
        throw std::invalid_argument("null graph handle");
    return g->g;
}

std::vector<std::pair<int, int>> parse_anchor_pairs(const char* anchors) {
    std::vector<std::pair<int, int>> out;
    if (!anchors || !*anchors)
        return out;
    std::string spec(anchors);
    for (char& ch : spec)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(spec);
    std::string token;
    while (in >> token) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("anchor '" + token + "' is not of the form u:v");
        try {
            out.emplace_back(std::stoi(token.substr(0, colon)),
                             std::stoi(token.substr(colon + 1)));
        } catch (const std::exception&) {
            throw std::invalid_argument("anchor '" + token + "' is not of the form u:v");
        }
    }
    return out;
}

} // namespace

extern "C" {

const char* gic_version(void) { return "0.1.0"; }

const char* gic_last_error(void) { return g_last_error.c_str(); }

void gic_string_free(char* s) { std::free(s); }

gic_status gic_graph_from_text(const char* text, const char* format, gic_graph** out) {
    if (!out)
        return fail(GIC_ERR_INVALID, "null output pointer");
    *out = nullptr;
    try {
        if (!text)
            throw std::invalid_argument("null input text");
        *out = new gic_graph{gic::parse_graph(text, format ? format : "auto")};
        return GIC_OK;
    } catch (const gic::ParseError& e) {
        return fail(GIC_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(GIC_ERR_INVALID, e.what());
    }
}

gic_status gic_graph_from_fixture(const char* name, gic_graph** out) {
    if (!out)
        return fail(GIC_ERR_INVALID, "null output pointer");
    *out = nullptr;
    try {
        if (!name)
            throw std::invalid_argument("null fixture name");
        *out = new gic_graph{gic::load_fixture(name)};
        return GIC_OK;
    } catch (const std::exception& e) {
        return fail(GIC_ERR_INVALID, e.what());
    }
}

void gic_graph_free(gic_graph* g) { delete g; }

int gic_graph_order(const gic_graph* g) {
    return g ? static_cast<int>(g->g.order()) : -1;
}

long long gic_graph_edge_count(const gic_graph* g) {
    return g ? static_cast<long long>(g->g.edge_count()) : -1;
}

int gic_fixture_exists(const char* name) {
    return name && gic::find_fixture(name) ? 1 : 0;
}

gic_status gic_fixture_list(int as_json, char** out) {
    return run(out, [&]() -> std::string {
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const gic::Fixture& f : gic::bundled_fixtures())
                arr.push_back({{"name", f.name},
                               {"format", f.format},
                               {"description", f.description}});
            return arr.dump(2) + "\n";
        }
        std::ostringstream text;
        for (const gic::Fixture& f : gic::bundled_fixtures())
            text << f.name << '\t' << f.format << '\t' << f.description << '\n';
        return text.str();
    });
}

gic_status gic_invariant(const gic_graph* g, const char* criterion, int as_json, char** out) {
    return run(out, [&] {
        const gic::CriterionValue v =
            criterion_or_throw(criterion).evaluate(graph_or_throw(g));
        return as_json ? gic::criterion_value_json(v) : gic::render_criterion_value(v);
    });
}

gic_status gic_partition(const gic_graph* g, const char* criterion, int subdivide,
                         int open_neighborhood, int as_json, char** out) {
    return run(out, [&] {
        const gic::Criterion& c = criterion_or_throw(criterion);
        const gic::Graph& graph = graph_or_throw(g);
        gic::Partition p = gic::base_partition(graph, c);
        if (subdivide)
            p = gic::subdivide_partition(graph, p, c, open_neighborhood == 0);
        return as_json ? gic::partition_json(p) : gic::render_partition(p);
    });
}

gic_status gic_verify(const gic_graph* g1, const gic_graph* g2, const char* criterion,
                      int as_json, char** out) {
    return run(out, [&] {
        const gic::Criterion& c = criterion_or_throw(criterion);
        const gic::Verdict v =
            gic::verify_criterion(graph_or_throw(g1), graph_or_throw(g2), c);
        return as_json ? gic::verdict_json(v, c.name()) : gic::render_verdict(v, c.name());
    });
}

gic_status gic_match(const gic_graph* g1, const gic_graph* g2, const char* criterion,
                     const gic_match_options* opts, int as_json, char** out) {
    return run(out, [&] {
        const gic::Criterion& c = criterion_or_throw(criterion);
        gic::SearchOptions options;
        if (opts) {
            options.closed_neighborhood = opts->open_neighborhood == 0;
            options.prealign = opts->no_prealign == 0;
            if (opts->anchored_cap > 0)
                options.anchored_cap = static_cast<std::size_t>(opts->anchored_cap);
            options.time_budget_seconds = opts->time_budget_seconds;
        }
        const gic::Verdict v =
            gic::search_isomorphism(graph_or_throw(g1), graph_or_throw(g2), c, options);
        return as_json ? gic::verdict_json(v, c.name()) : gic::render_verdict(v, c.name());
    });
}

gic_status gic_oracle_run(const gic_graph* g1, const gic_graph* g2, const char* anchors,
                          int as_json, char** out) {
    return run(out, [&]() -> std::string {
        const gic::Graph& a = graph_or_throw(g1);
        const gic::Graph& b = graph_or_throw(g2);
        const auto anchor_pairs = parse_anchor_pairs(anchors);
        if (anchor_pairs.empty()) {
            const auto mapping = gic::oracle::exhaustive_isomorphic(a, b);
            if (as_json) {
                nlohmann::json doc;
                doc["isomorphic"] = mapping.has_value();
                if (mapping) {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& [u, v] : *mapping)
                        arr.push_back(nlohmann::json::array({u, v}));
                    doc["mapping"] = arr;
                }
                return doc.dump(2) + "\n";
            }
            std::ostringstream text;
            text << "isomorphic: " << (mapping ? "yes" : "no") << '\n';
            if (mapping) {
                text << "mapping: ";
                for (std::size_t i = 0; i < mapping->size(); ++i) {
                    if (i)
                        text << ", ";
                    text << (*mapping)[i].first << "->" << (*mapping)[i].second;
                }
                text << '\n';
            }
            return text.str();
        }
        const bool ok = gic::oracle::anchored_isomorphic(a, b, anchor_pairs);
        if (as_json)
            return nlohmann::json{{"anchored_isomorphic", ok}}.dump(2) + "\n";
        return std::string("anchored-isomorphic: ") + (ok ? "yes" : "no") + "\n";
    });
}

} // extern "C"

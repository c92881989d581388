#include "gic/search.hpp"

#include "gic/errors.hpp"
#include "gic/oracle.hpp"
#include "gic/partition.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace gic {
namespace {

using Clock = std::chrono::steady_clock;

std::string signature_mismatch_detail(const std::string& what, const CriterionValue& left,
                                      const CriterionValue& right) {
    return what + ": [" + left.payload + "] vs [" + right.payload + "]";
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Per-node state of the candidate loop: the working subgraphs, the vertex u
// under consideration, its deleted-subgraph signature, and the G1-side
// induced/remaining signatures of N*(Dom(f) + u), computed lazily because a
// node whose candidates all fail the earlier filters never needs them.
struct CandidateFilter {
    const Graph& g1;
    const Graph& g2;
    const Criterion& c;
    const SearchOptions& opts;
    SearchStats& stats;

    const Graph& w1;
    const Graph& w2;
    const PartialMapping& f;
    int u;

    CriterionValue zu;
    std::optional<std::vector<int>> s1;
    std::optional<CriterionValue> zi1, zr1;

    CandidateFilter(const Graph& g1_, const Graph& g2_, const Criterion& c_,
                    const SearchOptions& opts_, SearchStats& stats_, const Graph& w1_,
                    const Graph& w2_, const PartialMapping& f_, int u_)
        : g1(g1_), g2(g2_), c(c_), opts(opts_), stats(stats_), w1(w1_), w2(w2_), f(f_),
          u(u_), zu(zeta(w1_.delete_vertex(u_))) {}

    CriterionValue zeta(const Graph& g) {
        ++stats.zeta_evals;
        return c.evaluate(g);
    }

    const std::vector<int>& source_hood() {
        if (!s1) {
            std::vector<int> dom;
            for (const auto& [a, b] : f.pairs())
                dom.push_back(a);
            dom.push_back(u);
            s1 = g1.set_neighborhood(dom, opts.closed_neighborhood);
        }
        return *s1;
    }

    PruneResult operator()(int v) {
        const CriterionValue zv = zeta(w2.delete_vertex(v));
        if (zv != zu)
            return {FilterStep::deleted_signature,
                    signature_mismatch_detail("criterion differs on the vertex-deleted "
                                              "working subgraphs",
                                              zu, zv)};

        if (auto conflict = f.edge_conflict(u, v)) {
            const std::string xu =
                "(" + std::to_string(conflict->x) + "," + std::to_string(u) + ")";
            const std::string fv =
                "(" + std::to_string(conflict->fx) + "," + std::to_string(v) + ")";
            return {FilterStep::edge_consistency,
                    conflict->edge_in_source
                        ? xu + " is an edge of G1 but " + fv + " is not an edge of G2"
                        : xu + " is not an edge of G1 but " + fv + " is an edge of G2"};
        }

        std::vector<int> ran;
        for (const auto& [a, b] : f.pairs())
            ran.push_back(b);
        ran.push_back(v);
        const std::vector<int> s2 = g2.set_neighborhood(ran, opts.closed_neighborhood);
        const std::vector<int>& hood1 = source_hood();
        if (!zi1)
            zi1 = zeta(g1.induced_subgraph(hood1));
        const CriterionValue zi2 = zeta(g2.induced_subgraph(s2));
        if (zi2 != *zi1)
            return {FilterStep::neighborhood_signature,
                    signature_mismatch_detail("criterion differs on the induced "
                                              "neighborhood subgraphs",
                                              *zi1, zi2)};
        if (!zr1)
            zr1 = zeta(g1.remaining_subgraph(hood1));
        const CriterionValue zr2 = zeta(g2.remaining_subgraph(s2));
        if (zr2 != *zr1)
            return {FilterStep::neighborhood_signature,
                    signature_mismatch_detail("criterion differs on the remaining subgraphs",
                                              *zr1, zr2)};

        if (std::max(hood1.size(), s2.size()) > opts.anchored_cap) {
            ++stats.anchored_skipped;
            return {FilterStep::accepted, ""};
        }
        ++stats.anchored_checks;
        std::vector<std::pair<int, int>> anchors;
        auto consider = [&](int a, int b) -> bool {
            const bool in1 = contains(hood1, a);
            const bool in2 = contains(s2, b);
            if (in1 != in2)
                return false;
            if (in1)
                anchors.emplace_back(a, b);
            return true;
        };
        for (const auto& [a, b] : f.pairs())
            if (!consider(a, b))
                return {FilterStep::anchored_extension,
                        "mapped pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") lies in only one neighborhood subgraph"};
        if (!consider(u, v))
            return {FilterStep::anchored_extension,
                    "candidate pair lies in only one neighborhood subgraph"};
        const std::size_t cap = std::max(hood1.size(), s2.size());
        if (!oracle::anchored_isomorphic(g1.induced_subgraph(hood1), g2.induced_subgraph(s2),
                                         anchors, cap))
            return {FilterStep::anchored_extension,
                    "no isomorphism of the induced neighborhood subgraphs extends the "
                    "current mapping"};
        return {FilterStep::accepted, ""};
    }
};

class SearchEngine {
public:
    SearchEngine(const Graph& g1, const Graph& g2, const Criterion& c,
                 const SearchOptions& opts)
        : g1_(g1), g2_(g2), c_(c), opts_(opts), f_(g1, g2) {}

    Verdict run() {
        start_ = Clock::now();
        if (opts_.time_budget_seconds > 0)
            deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(opts_.time_budget_seconds));

        Verdict out;
        auto finish = [&](Verdict::Kind kind) -> Verdict& {
            out.kind = kind;
            out.stats = stats_;
            out.stats.elapsed_seconds =
                std::chrono::duration<double>(Clock::now() - start_).count();
            return out;
        };

        if (g1_.order() != g2_.order()) {
            out.evidence = "vertex counts differ: " + std::to_string(g1_.order()) + " vs " +
                           std::to_string(g2_.order());
            return finish(Verdict::Kind::NotIsomorphic);
        }
        const CriterionValue z1 = zeta(g1_);
        const CriterionValue z2 = zeta(g2_);
        if (z1 != z2) {
            out.evidence = "criterion " + c_.name() + " differs on the full graphs: [" +
                           z1.payload + "] vs [" + z2.payload + "]";
            return finish(Verdict::Kind::NotIsomorphic);
        }

        if (opts_.prealign) {
            const Criterion counted(c_.name(),
                                    [this](const Graph& g) { return zeta(g); });
            const Partition p1 = subdivide_partition(
                g1_, base_partition(g1_, counted), counted, opts_.closed_neighborhood);
            const Partition p2 = subdivide_partition(
                g2_, base_partition(g2_, counted), counted, opts_.closed_neighborhood);
            const Alignment alignment = align_partitions(p1, p2);
            if (!alignment.compatible()) {
                out.evidence = "subdivided-partition alignment failed: " +
                               *alignment.incompatibility +
                               " (the block-key multiset is an invariant)";
                return finish(Verdict::Kind::NotIsomorphic);
            }
            aligned_pairs_ = alignment.pairs; // keep the pointed-to storage alive
            for (const BlockPair& pair : aligned_pairs_)
                for (int u : pair.left)
                    candidate_block_[u] = &pair.right;
        }

        if (dfs(g1_, g2_)) {
            out.mapping = f_.pairs();
            return finish(Verdict::Kind::Isomorphic);
        }
        out.evidence = "search exhausted: no bijection satisfies the edge-preservation "
                       "definition under criterion " +
                       c_.name();
        return finish(Verdict::Kind::NotIsomorphic);
    }

private:
    CriterionValue zeta(const Graph& g) {
        ++stats_.zeta_evals;
        return c_.evaluate(g);
    }

    void check_deadline() const {
        if (deadline_ && Clock::now() > *deadline_)
            throw ResourceLimitError("time budget of " +
                                     std::to_string(opts_.time_budget_seconds) +
                                     " seconds exceeded");
    }

    bool dfs(const Graph& w1, const Graph& w2) {
        check_deadline();
        if (w1.order() == 0)
            return true;
        CandidateFilter filter(g1_, g2_, c_, opts_, stats_, w1, w2, f_,
                               w1.labels().front());
        const std::vector<int>* block = nullptr;
        if (opts_.prealign)
            block = candidate_block_.at(filter.u);
        for (int v : w2.labels()) {
            if (block && !contains(*block, v))
                continue;
            if (!filter(v).accepted())
                continue;
            f_.push(filter.u, v);
            if (dfs(w1.delete_vertex(filter.u), w2.delete_vertex(v)))
                return true;
            f_.pop();
            ++stats_.backtracks;
        }
        ++stats_.dead_ends;
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    const Criterion& c_;
    SearchOptions opts_;
    PartialMapping f_;
    SearchStats stats_;
    std::vector<BlockPair> aligned_pairs_;
    std::map<int, const std::vector<int>*> candidate_block_;
    Clock::time_point start_;
    std::optional<Clock::time_point> deadline_;
};

} // namespace

Verdict search_isomorphism(const Graph& g1, const Graph& g2, const Criterion& c,
                           const SearchOptions& options) {
    return SearchEngine(g1, g2, c, options).run();
}

PruneResult explain_prune(const Graph& g1, const Graph& g2, const Criterion& c,
                          const PartialMapping& f, int u, int v,
                          const SearchOptions& options) {
    if (f.maps(u) || f.hits(v))
        throw std::invalid_argument("explain_prune: candidate pair is already mapped");
    std::vector<int> dom, ran;
    for (const auto& [a, b] : f.pairs()) {
        dom.push_back(a);
        ran.push_back(b);
    }
    const Graph w1 = g1.remaining_subgraph(dom);
    const Graph w2 = g2.remaining_subgraph(ran);
    if (!w1.has_vertex(u) || !w2.has_vertex(v))
        throw std::invalid_argument("explain_prune: candidate labels are unknown");
    SearchStats scratch;
    CandidateFilter filter(g1, g2, c, options, scratch, w1, w2, f, u);
    return filter(v);
}

} // namespace gic

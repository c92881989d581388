#include "gic/oracle.hpp"

#include "gic/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gic {
namespace oracle {
namespace {

void check_cap(const Graph& g1, const Graph& g2, std::size_t cap, const char* what) {
    const std::size_t n = std::max(g1.order(), g2.order());
    if (n > cap)
        throw ResourceLimitError(std::string(what) + ": graph order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
}

// Position-indexed backtracking over bijections. images[i] is the position in
// g2 assigned to position i of g1; anchors pin positions, and their targets
// are reserved up front.
class Matcher {
public:
    Matcher(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
        adj1_.resize(n_ * n_);
        adj2_.resize(n_ * n_);
        const auto& l1 = g1.labels();
        const auto& l2 = g2.labels();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                adj1_[i * n_ + j] = g1.adjacent(l1[i], l1[j]);
                adj2_[i * n_ + j] = g2.adjacent(l2[i], l2[j]);
            }
        pinned_.assign(n_, npos);
        reserved_.assign(n_, 0);
        images_.assign(n_, npos);
        used_.assign(n_, 0);
    }

    void pin(std::size_t i, std::size_t j) {
        pinned_[i] = j;
        reserved_[j] = 1;
    }

    bool run() { return extend(0); }

    std::vector<std::pair<int, int>> mapping() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < n_; ++i)
            out.emplace_back(g1_.labels()[i], g2_.labels()[images_[i]]);
        return out;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool consistent(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < i; ++k)
            if (adj1_[k * n_ + i] != adj2_[images_[k] * n_ + j])
                return false;
        return true;
    }

    bool extend(std::size_t i) {
        if (i == n_)
            return true;
        if (pinned_[i] != npos) {
            const std::size_t j = pinned_[i];
            if (!used_[j] && consistent(i, j)) {
                images_[i] = j;
                used_[j] = 1;
                if (extend(i + 1))
                    return true;
                used_[j] = 0;
            }
            return false;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (used_[j] || reserved_[j] || !consistent(i, j))
                continue;
            images_[i] = j;
            used_[j] = 1;
            if (extend(i + 1))
                return true;
            used_[j] = 0;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    std::size_t n_;
    std::vector<unsigned char> adj1_, adj2_;
    std::vector<std::size_t> pinned_;
    std::vector<unsigned char> reserved_;
    std::vector<std::size_t> images_;
    std::vector<unsigned char> used_;
};

std::size_t position_of(const Graph& g, int label) {
    const auto& ls = g.labels();
    auto it = std::lower_bound(ls.begin(), ls.end(), label);
    if (it == ls.end() || *it != label)
        throw std::invalid_argument("anchor label " + std::to_string(label) +
                                    " is absent from the graph");
    return static_cast<std::size_t>(it - ls.begin());
}

} // namespace

std::optional<std::vector<std::pair<int, int>>>
exhaustive_isomorphic(const Graph& g1, const Graph& g2, std::size_t cap) {
    check_cap(g1, g2, cap, "exhaustive isomorphism");
    if (g1.order() != g2.order())
        return std::nullopt;
    Matcher m(g1, g2);
    if (!m.run())
        return std::nullopt;
    return m.mapping();
}

bool anchored_isomorphic(const Graph& g1, const Graph& g2,
                         const std::vector<std::pair<int, int>>& anchors, std::size_t cap) {
    check_cap(g1, g2, cap, "anchored isomorphism");
    if (g1.order() != g2.order())
        return false;
    Matcher m(g1, g2);
    std::vector<unsigned char> seen_u(g1.order(), 0), seen_v(g2.order(), 0);
    for (const auto& [u, v] : anchors) {
        const std::size_t i = position_of(g1, u);
        const std::size_t j = position_of(g2, v);
        if (seen_u[i] || seen_v[j])
            throw std::invalid_argument("anchors are not injective");
        seen_u[i] = seen_v[j] = 1;
        m.pin(i, j);
    }
    return m.run();
}

CriterionValue canonical_form(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw ResourceLimitError("canonical form: graph order " + std::to_string(g.order()) +
                                 " exceeds cap " + std::to_string(cap));
    const std::size_t n = g.order();
    const auto& ls = g.labels();
    std::vector<unsigned char> adj(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            adj[i * n + j] = g.adjacent(ls[i], ls[j]);

    // Depth-first minimization: placing a vertex at position k appends the
    // bits towards positions 0..k-1; branches whose prefix already exceeds
    // the best complete string are cut.
    std::string best;
    std::string prefix;
    std::vector<std::size_t> chosen;
    std::vector<unsigned char> used(n, 0);
    auto rec = [&](auto&& self) -> void {
        const std::size_t k = chosen.size();
        if (k == n) {
            if (best.empty() || prefix < best)
                best = prefix;
            return;
        }
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand])
                continue;
            const std::size_t len0 = prefix.size();
            bool viable = true;
            for (std::size_t i = 0; i < k; ++i) {
                prefix.push_back(adj[chosen[i] * n + cand] ? '1' : '0');
                if (!best.empty() && prefix.compare(0, prefix.size(),
                                                    best, 0, prefix.size()) > 0) {
                    viable = false;
                    break;
                }
            }
            if (viable) {
                used[cand] = 1;
                chosen.push_back(cand);
                self(self);
                chosen.pop_back();
                used[cand] = 0;
            }
            prefix.resize(len0);
        }
    };
    rec(rec);
    return {"canon", best};
}

Criterion canonical_form_criterion(std::size_t cap) {
    return Criterion("canon", [cap](const Graph& g) { return canonical_form(g, cap); });
}

bool is_isomorphism(const Graph& g1, const Graph& g2,
                    const std::vector<std::pair<int, int>>& pairs) {
    if (pairs.size() != g1.order() || g1.order() != g2.order())
        return false;
    std::map<int, int> f;
    std::map<int, int> seen_v;
    for (const auto& [u, v] : pairs) {
        if (!g1.has_vertex(u) || !g2.has_vertex(v))
            return false;
        if (!f.emplace(u, v).second || !seen_v.emplace(v, u).second)
            return false;
    }
    for (const auto& [u, fu] : f)
        for (const auto& [w, fw] : f)
            if (u < w && g1.adjacent(u, w) != g2.adjacent(fu, fw))
                return false;
    return true;
}

} // namespace oracle
} // namespace gic

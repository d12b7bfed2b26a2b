#include "commring/domination.hpp"

#include <algorithm>
#include <cassert>

#include "commring/errors.hpp"

namespace commring {

BoundsReport gamma_bounds(const SimpleGraph& g) {
    const int m = g.vertex_count();
    BoundsReport r;
    if (m == 0) return r;
    const int max_deg = g.max_degree();
    const int min_deg = g.min_degree();
    r.lower = (m + max_deg) / (1 + max_deg);  // ceil(m / (1 + max_deg))
    r.upper = m - max_deg;
    r.isolated_free = min_deg >= 1;
    if (r.isolated_free) {
        r.upper = std::min(r.upper, m / 2);
        r.upper = std::min(r.upper, (m + 2 - min_deg) / 2);
    }
    return r;
}

namespace {

struct DomSearch {
    const SimpleGraph& g;
    int m;
    std::vector<BitVec> closed;  // N[v]
    std::vector<int> current;
    std::vector<int> best;
    int best_size;

    explicit DomSearch(const SimpleGraph& graph)
        : g(graph), m(graph.vertex_count()) {
        closed.reserve(m);
        for (int v = 0; v < m; ++v) {
            BitVec nb = g.row(v);
            nb.set(v);
            closed.push_back(std::move(nb));
        }
    }

    // Deterministic greedy cover for the initial upper bound.
    void seed_greedy(BitVec undominated) {
        while (undominated.any()) {
            int pick = -1, pick_cover = -1;
            for (int v = 0; v < m; ++v) {
                int cover = closed[v].count_and(undominated);
                if (cover > pick_cover) {
                    pick_cover = cover;
                    pick = v;
                }
            }
            current.push_back(pick);
            undominated.subtract(closed[pick]);
        }
        best = current;
        best_size = int(best.size());
        current.clear();
    }

    void dfs(const BitVec& undominated) {
        if (undominated.none()) {
            if (int(current.size()) < best_size) {
                best = current;
                best_size = int(best.size());
            }
            return;
        }
        // residual lower bound: ceil(|U| / best single-vertex coverage);
        // max_cover >= 1 because an undominated vertex covers itself
        int max_cover = 0, branch_vertex = -1;
        for (int v = 0; v < m; ++v) {
            int cover = closed[v].count_and(undominated);
            if (cover > max_cover) max_cover = cover;
            if (branch_vertex < 0 && undominated.test(v)) branch_vertex = v;
        }
        assert(max_cover >= 1 && branch_vertex >= 0);
        // branch on an undominated vertex of maximum coverage, lowest index
        int branch_cover = closed[branch_vertex].count_and(undominated);
        for (int v = undominated.find_next(branch_vertex); v >= 0;
             v = undominated.find_next(v)) {
            int cover = closed[v].count_and(undominated);
            if (cover > branch_cover) {
                branch_cover = cover;
                branch_vertex = v;
            }
        }
        int need = (undominated.count() + max_cover - 1) / max_cover;
        if (int(current.size()) + need >= best_size) return;

        const BitVec& cands = closed[branch_vertex];
        for (int v = cands.find_first(); v >= 0; v = cands.find_next(v)) {
            current.push_back(v);
            BitVec rest = undominated;
            rest.subtract(closed[v]);
            dfs(rest);
            current.pop_back();
        }
    }
};

}  // namespace

namespace {

DominationCertificate solve_connected(const SimpleGraph& g) {
    DominationCertificate cert;
    cert.method = DominationCertificate::BranchAndBound;
    if (g.vertex_count() == 0) return cert;

    DomSearch search(g);
    search.seed_greedy(BitVec::full(g.vertex_count()));
    search.dfs(BitVec::full(g.vertex_count()));

    cert.gamma = search.best_size;
    cert.witness = search.best;
    std::sort(cert.witness.begin(), cert.witness.end());
    return cert;
}

}  // namespace

DominationCertificate gamma_exact(const SimpleGraph& g) {
    auto comps = components(g);
    if (comps.size() <= 1) return solve_connected(g);
    // gamma is additive over components
    DominationCertificate cert;
    cert.method = DominationCertificate::BranchAndBound;
    for (const auto& comp : comps) {
        DominationCertificate part = solve_connected(induced(g, comp));
        cert.gamma += part.gamma;
        for (int v : part.witness) cert.witness.push_back(comp[v]);
    }
    std::sort(cert.witness.begin(), cert.witness.end());
    return cert;
}

DominationCertificate gamma_bruteforce(const SimpleGraph& g) {
    const int m = g.vertex_count();
    if (m > 24) throw TooLarge("gamma_bruteforce supports at most 24 vertices");
    DominationCertificate cert;
    cert.method = DominationCertificate::BruteForce;
    if (m == 0) return cert;

    std::vector<BitVec> closed;
    closed.reserve(m);
    for (int v = 0; v < m; ++v) {
        BitVec nb = g.row(v);
        nb.set(v);
        closed.push_back(std::move(nb));
    }

    std::vector<int> combo;
    for (int k = 1; k <= m; ++k) {
        combo.resize(k);
        for (int i = 0; i < k; ++i) combo[i] = i;
        while (true) {
            BitVec covered(m);
            for (int v : combo) covered |= closed[v];
            if (covered.count() == m) {
                cert.gamma = k;
                cert.witness = combo;
                return cert;
            }
            // next combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && combo[i] == m - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    cert.gamma = m;  // unreachable: the full vertex set always dominates
    return cert;
}

bool verify_dominating(const SimpleGraph& g, const std::vector<int>& d) {
    BitVec in_d(g.vertex_count());
    for (int v : d) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in_d.set(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_d.test(v)) continue;
        if (!g.row(v).intersects(in_d)) return false;
    }
    return true;
}

}  // namespace commring

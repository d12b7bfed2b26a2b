#include "commring/signed_domination.hpp"

#include <algorithm>

namespace commring {

namespace {

struct SignedSearch {
    const SimpleGraph& g;
    int m;
    std::vector<int> cap;    // remaining minus-capacity of each closed nbhd
    long long cap_sum = 0;
    std::vector<int> suffix_min_closed;  // min |N[u]| over u >= v
    std::vector<int> current;
    std::vector<int> best;
    int best_size = -1;

    explicit SignedSearch(const SimpleGraph& graph)
        : g(graph), m(graph.vertex_count()), cap(m), suffix_min_closed(m + 1) {
        for (int v = 0; v < m; ++v) {
            cap[v] = g.degree(v) / 2;
            cap_sum += cap[v];
        }
        suffix_min_closed[m] = m + 1;
        for (int v = m - 1; v >= 0; --v)
            suffix_min_closed[v] =
                std::min(suffix_min_closed[v + 1], g.degree(v) + 1);
    }

    void dfs(int v) {
        // every further minus vertex consumes a full closed neighbourhood
        // of capacity, so the pool bounds the additions
        long long additions = std::min<long long>(
            m - v, cap_sum / suffix_min_closed[std::min(v, m)]);
        if (int(current.size()) + additions <= best_size) return;
        if (v == m) {
            best = current;
            best_size = int(current.size());
            return;
        }
        // include v in V-: consumes one unit of capacity on N[v]
        bool fits = cap[v] >= 1;
        const BitVec& row = g.row(v);
        for (int u = row.find_first(); fits && u >= 0; u = row.find_next(u))
            fits = cap[u] >= 1;
        if (fits) {
            --cap[v];
            for (int u = row.find_first(); u >= 0; u = row.find_next(u)) --cap[u];
            cap_sum -= g.degree(v) + 1;
            current.push_back(v);
            dfs(v + 1);
            current.pop_back();
            cap_sum += g.degree(v) + 1;
            ++cap[v];
            for (int u = row.find_first(); u >= 0; u = row.find_next(u)) ++cap[u];
        }
        dfs(v + 1);
    }
};

SignedCertificate solve_connected_signed(const SimpleGraph& g) {
    SignedCertificate cert;
    if (g.vertex_count() == 0) return cert;
    SignedSearch search(g);
    search.dfs(0);
    cert.minus_set = search.best;
    std::sort(cert.minus_set.begin(), cert.minus_set.end());
    cert.gamma_s = g.vertex_count() - 2 * int(cert.minus_set.size());
    return cert;
}

}  // namespace

SignedCertificate gamma_signed_exact(const SimpleGraph& g) {
    auto comps = components(g);
    if (comps.size() <= 1) return solve_connected_signed(g);
    // gamma_s is additive over components
    SignedCertificate cert;
    cert.gamma_s = 0;
    for (const auto& comp : comps) {
        SignedCertificate part = solve_connected_signed(induced(g, comp));
        cert.gamma_s += part.gamma_s;
        for (int v : part.minus_set) cert.minus_set.push_back(comp[v]);
    }
    std::sort(cert.minus_set.begin(), cert.minus_set.end());
    return cert;
}

bool verify_signed(const SimpleGraph& g, const std::vector<int>& minus_set) {
    std::vector<int> f(g.vertex_count(), 1);
    for (int v : minus_set) {
        if (v < 0 || v >= g.vertex_count()) return false;
        f[v] = -1;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int sum = f[v];
        const BitVec& row = g.row(v);
        for (int u = row.find_first(); u >= 0; u = row.find_next(u)) sum += f[u];
        if (sum < 1) return false;
    }
    return true;
}

}  // namespace commring

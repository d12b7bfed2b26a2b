#include "commring/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>

#include "commring/errors.hpp"

namespace commring {

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < m_; ++v) total += degree(v);
    return total / 2;
}

void SimpleGraph::add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < m_ && v < m_);
    rows_[u].set(v);
    rows_[v].set(u);
}

int SimpleGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < m_; ++v) d = std::max(d, degree(v));
    return d;
}

int SimpleGraph::min_degree() const {
    if (m_ == 0) return 0;
    int d = m_;
    for (int v = 0; v < m_; ++v) d = std::min(d, degree(v));
    return d;
}

void SimpleGraph::set_labels(std::vector<int> labels) {
    assert(int(labels.size()) == m_);
    labels_ = std::move(labels);
}

std::string to_string(const ComponentShape& s) {
    switch (s.tag) {
        case ComponentShape::IsolatedVertex: return "K1";
        case ComponentShape::P2: return "P2";
        case ComponentShape::CompleteK: return "K" + std::to_string(s.a);
        case ComponentShape::CycleC: return "C" + std::to_string(s.a);
        case ComponentShape::CompleteBipartite:
            return "K" + std::to_string(s.a) + "," + std::to_string(s.b);
        case ComponentShape::CoronaHK1: return "HoK1";
        case ComponentShape::Other: return "other";
    }
    return "other";
}

SimpleGraph commuting_graph(const FiniteRing& r) {
    ElementSet z = center(r);
    std::vector<int> verts;
    for (int a = 0; a < r.n; ++a)
        if (!z.contains(a)) verts.push_back(a);
    if (verts.empty())
        throw EmptyVertexSet("commuting graph of a commutative ring is empty");

    SimpleGraph g(int(verts.size()));
    g.set_labels(verts);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (r.mul_at(verts[i], verts[j]) == r.mul_at(verts[j], verts[i]))
                g.add_edge(int(i), int(j));
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    const int m = g.vertex_count();
    SimpleGraph c(m);
    if (g.has_labels()) {
        std::vector<int> labels(m);
        for (int v = 0; v < m; ++v) labels[v] = g.label(v);
        c.set_labels(std::move(labels));
    }
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

namespace {

// BFS distances from src; -1 for unreachable.
std::vector<int> bfs_dist(const SimpleGraph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const BitVec& row = g.row(v);
        for (int u = row.find_first(); u >= 0; u = row.find_next(u))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

}  // namespace

std::optional<int> diameter(const SimpleGraph& g) {
    if (g.vertex_count() < 2)
        throw TooSmall("diameter needs at least 2 vertices");
    int diam = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_dist(g, v);
        for (int d : dist) {
            if (d < 0) return std::nullopt;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

bool is_connected(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_dist(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        auto dist = bfs_dist(g, v);
        std::vector<int> comp;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (dist[u] >= 0) {
                seen[u] = 1;
                comp.push_back(u);
            }
        out.push_back(std::move(comp));
    }
    return out;
}

SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& verts) {
    SimpleGraph s(int(verts.size()));
    if (g.has_labels()) {
        std::vector<int> labels(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) labels[i] = g.label(verts[i]);
        s.set_labels(std::move(labels));
    }
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) s.add_edge(int(i), int(j));
    return s;
}

namespace {

// Leaves of degree 1 matched one-to-one onto a connected core: the corona
// H o K1 for connected H. Components of size 2 are handled by the caller.
bool is_corona_k1(const SimpleGraph& c) {
    const int m = c.vertex_count();
    if (m < 2 || m % 2 != 0) return false;
    std::vector<int> leaves, core;
    for (int v = 0; v < m; ++v)
        (c.degree(v) == 1 ? leaves : core).push_back(v);
    if (int(leaves.size()) != m / 2 || int(core.size()) != m / 2) return false;
    std::vector<char> is_core(m, 0);
    for (int v : core) is_core[v] = 1;
    for (int v : core) {
        int pendant = 0;
        const BitVec& row = c.row(v);
        for (int u = row.find_first(); u >= 0; u = row.find_next(u))
            if (!is_core[u]) ++pendant;
        if (pendant != 1) return false;
    }
    return is_connected(induced(c, core));
}

}  // namespace

ComponentShape classify_component(const SimpleGraph& g,
                                  const std::vector<int>& comp) {
    SimpleGraph c = induced(g, comp);
    const int m = c.vertex_count();
    if (m == 1) return {ComponentShape::IsolatedVertex, 1, 0};
    if (m == 2) return {ComponentShape::P2, 2, 0};

    bool complete = true;
    for (int v = 0; v < m && complete; ++v) complete = c.degree(v) == m - 1;
    if (complete) return {ComponentShape::CompleteK, m, 0};

    bool two_regular = true;
    for (int v = 0; v < m && two_regular; ++v) two_regular = c.degree(v) == 2;
    if (two_regular) return {ComponentShape::CycleC, m, 0};

    if (auto parts = is_complete_bipartite(c))
        return {ComponentShape::CompleteBipartite, parts->first, parts->second};

    if (is_corona_k1(c)) return {ComponentShape::CoronaHK1, m / 2, 0};

    return {ComponentShape::Other, m, 0};
}

std::optional<std::pair<int, int>> is_complete_bipartite(const SimpleGraph& g) {
    const int m = g.vertex_count();
    if (m < 2 || !is_connected(g)) return std::nullopt;

    std::vector<int> color(m, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const BitVec& row = g.row(v);
        for (int u = row.find_first(); u >= 0; u = row.find_next(u)) {
            if (color[u] < 0) {
                color[u] = 1 - color[v];
                q.push(u);
            } else if (color[u] == color[v]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    int a = 0;
    for (int v = 0; v < m; ++v) a += color[v] == 0;
    int b = m - a;
    if (a == 0 || b == 0) return std::nullopt;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (color[u] != color[v] && !g.adjacent(u, v)) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h,
                           int max_vertices) {
    long long m = (long long)g.vertex_count() * h.vertex_count();
    if (m > max_vertices)
        throw OverflowGuard("strong product on " + std::to_string(m) +
                            " vertices exceeds cap " +
                            std::to_string(max_vertices));
    const int mh = h.vertex_count();
    SimpleGraph p{int(m)};
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int vp = 0; vp < mh; ++vp)
            for (int u = v; u < g.vertex_count(); ++u)
                for (int up = (u == v ? vp + 1 : 0); up < mh; ++up) {
                    bool gv = g.adjacent(v, u), hv = h.adjacent(vp, up);
                    if ((gv && vp == up) || (v == u && hv) || (gv && hv))
                        p.add_edge(v * mh + vp, u * mh + up);
                }
    return p;
}

namespace {

// Iterated neighbour-class refinement; the class vector is an isomorphism
// invariant per vertex.
std::vector<int> wl_classes(const SimpleGraph& g) {
    const int m = g.vertex_count();
    std::vector<int> cls(m);
    for (int v = 0; v < m; ++v) cls[v] = g.degree(v);
    for (int round = 0; round < 3; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<std::pair<int, std::vector<int>>> sig(m);
        for (int v = 0; v < m; ++v) {
            std::vector<int> nb;
            const BitVec& row = g.row(v);
            for (int u = row.find_first(); u >= 0; u = row.find_next(u))
                nb.push_back(cls[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {cls[v], std::move(nb)};
        }
        for (int v = 0; v < m; ++v) next_ids.emplace(sig[v], 0);
        int id = 0;
        for (auto& kv : next_ids) kv.second = id++;
        for (int v = 0; v < m; ++v) cls[v] = next_ids.at(sig[v]);
    }
    return cls;
}

struct GraphIso {
    const SimpleGraph& g;
    const SimpleGraph& h;
    std::vector<int> cg, ch;       // refinement classes
    std::vector<int> order;        // g vertices, rarest class first
    std::vector<int> map;          // g vertex -> h vertex
    std::vector<char> used;

    GraphIso(const SimpleGraph& a, const SimpleGraph& b)
        : g(a), h(b), map(a.vertex_count(), -1), used(b.vertex_count(), 0) {
        cg = wl_classes(a);
        ch = wl_classes(b);
        order.resize(a.vertex_count());
        for (int v = 0; v < a.vertex_count(); ++v) order[v] = v;
        std::vector<int> freq(a.vertex_count() + 1, 0);
        for (int c : cg) ++freq[c];
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            if (freq[cg[x]] != freq[cg[y]]) return freq[cg[x]] < freq[cg[y]];
            return x < y;
        });
    }

    bool compatible(int v, int w) const {
        if (cg[v] != ch[w]) return false;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (map[u] >= 0 && g.adjacent(v, u) != h.adjacent(w, map[u]))
                return false;
        return true;
    }

    bool search(size_t idx) {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int w = 0; w < h.vertex_count(); ++w) {
            if (used[w] || !compatible(v, w)) continue;
            map[v] = w;
            used[w] = 1;
            if (search(idx + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool graph_iso_small(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() > 32 || h.vertex_count() > 32)
        throw TooLarge("graph_iso_small supports at most 32 vertices");
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;

    std::vector<int> dg(g.vertex_count()), dh(h.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.vertex_count(); ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;

    GraphIso iso(g, h);
    auto sg = iso.cg;
    auto sh = iso.ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;

    return iso.search(0);
}

SimpleGraph complete_graph(int m) {
    SimpleGraph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int m) {
    SimpleGraph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

SimpleGraph path_graph(int m) {
    SimpleGraph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph empty_graph(int m) { return SimpleGraph(m); }

}  // namespace commring

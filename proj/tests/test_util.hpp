#pragma once

#include <map>
#include <random>
#include <vector>

#include "commring/enumerate.hpp"
#include "commring/graph.hpp"
#include "commring/ring.hpp"

namespace test_util {

// All non-commutative rings of orders 2..max_order, one per class, cached
// across test cases.
inline const std::vector<commring::FiniteRing>& noncommutative_corpus(
    int max_order) {
    static std::map<int, std::vector<commring::FiniteRing>> cache;
    auto it = cache.find(max_order);
    if (it != cache.end()) return it->second;
    std::vector<commring::FiniteRing> rings;
    for (int order = 2; order <= max_order; ++order) {
        commring::EnumerationSpec spec;
        spec.order = order;
        spec.require_noncommutative = true;
        auto res = commring::enumerate_rings(spec);
        for (auto& r : res.rings) rings.push_back(std::move(r));
    }
    return cache.emplace(max_order, std::move(rings)).first->second;
}

inline commring::SimpleGraph random_graph(int m, double p, std::mt19937& rng) {
    commring::SimpleGraph g(m);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Hand-built E/F tables of order 4 on the XOR group, indices
// 0, y = 1, x = 2, x + y = 3.
inline std::vector<std::vector<int>> xor_table4() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return t;
}

// x*x = x, y*y = y, xy = x, yx = y extended bilinearly: u*v is u when v has
// odd coordinate sum and 0 otherwise.
inline std::vector<std::vector<int>> e4_mul_table() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4, 0));
    for (int u = 0; u < 4; ++u)
        for (int v : {1, 2}) t[u][v] = u;
    return t;
}

}  // namespace test_util

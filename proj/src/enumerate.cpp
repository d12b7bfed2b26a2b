#include "commring/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "commring/errors.hpp"
#include "commring/ring_io.hpp"

namespace commring {

namespace {

constexpr int kMaxGens = 4;  // Z_2^4 at order 16

// Descending partitions of e, in descending lexicographic order.
std::vector<std::vector<int>> partitions(int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, e, e);
    return out;
}

int int_pow(int b, int e) {
    int r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

std::vector<std::vector<int>> abelian_groups(int n) {
    if (n < 2 || n > 16)
        throw UnsupportedOrder("enumeration supports orders 2..16, got " +
                               std::to_string(n));
    // prime factorisation
    std::vector<std::pair<int, int>> pe;
    int rest = n;
    for (int p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            pe.emplace_back(p, e);
        }
    if (rest > 1) pe.emplace_back(rest, 1);

    // one partition choice per prime; invariant factors combine columnwise
    std::vector<std::vector<std::vector<int>>> parts;
    for (auto [p, e] : pe) parts.push_back(partitions(e));

    std::vector<std::vector<int>> out;
    std::vector<size_t> pick(pe.size(), 0);
    while (true) {
        size_t len = 0;
        for (size_t i = 0; i < pe.size(); ++i)
            len = std::max(len, parts[i][pick[i]].size());
        std::vector<int> factors(len, 1);
        for (size_t i = 0; i < pe.size(); ++i) {
            const auto& lambda = parts[i][pick[i]];
            for (size_t j = 0; j < lambda.size(); ++j)
                factors[j] *= int_pow(pe[i].first, lambda[j]);
        }
        out.push_back(std::move(factors));

        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < parts[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a > b; });
    return out;
}

namespace {

// The additive group Z_{d1} x ... x Z_{dk} with mixed-radix element indices
// (first coordinate most significant) plus the lookup tables the structure
// search needs.
struct GroupTable {
    std::vector<int> factors;
    int n = 0;
    int k = 0;
    std::vector<uint16_t> add;                       // n*n
    std::vector<std::array<uint8_t, kMaxGens>> coords;
    std::vector<std::vector<uint16_t>> times_tab;    // times_tab[e][s] = s*e, s < d1
    std::vector<int> order_of;

    static GroupTable build(const std::vector<int>& factors) {
        GroupTable g;
        g.factors = factors;
        g.k = int(factors.size());
        g.n = 1;
        for (int d : factors) g.n *= d;

        std::vector<int> stride(g.k, 1);
        for (int i = g.k - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1];

        g.coords.resize(g.n);
        for (int e = 0; e < g.n; ++e) {
            int rest = e;
            for (int i = 0; i < g.k; ++i) {
                g.coords[e][i] = uint8_t(rest / stride[i]);
                rest %= stride[i];
            }
        }
        g.add.resize(size_t(g.n) * g.n);
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b) {
                int s = 0;
                for (int i = 0; i < g.k; ++i)
                    s += (g.coords[a][i] + g.coords[b][i]) % factors[i] * stride[i];
                g.add[size_t(a) * g.n + b] = uint16_t(s);
            }
        const int d1 = factors[0];
        g.times_tab.assign(g.n, std::vector<uint16_t>(d1, 0));
        g.order_of.assign(g.n, 1);
        for (int e = 0; e < g.n; ++e) {
            int acc = 0;
            for (int s = 1; s < d1; ++s) {
                acc = g.add[size_t(acc) * g.n + e];
                g.times_tab[e][s] = uint16_t(acc);
            }
            if (e != 0) {
                int ord = 1, walk = e;
                while (walk != 0) {
                    walk = g.add[size_t(walk) * g.n + e];
                    ++ord;
                }
                g.order_of[e] = ord;
            }
        }
        return g;
    }

    int add_at(int a, int b) const { return add[size_t(a) * n + b]; }
    int scalar(int s, int e) const { return times_tab[e][s % factors[0]]; }
};

// All k*k generator products of one additive group, depth-first in
// lexicographic order, keeping only choices that pass every associativity
// triple that is already decidable. Distributivity holds by construction:
// candidates are restricted to elements killed by both generator orders, so
// the bilinear extension is well defined.
struct StructureSearch {
    const GroupTable& grp;
    int k, kk;
    std::vector<std::vector<uint16_t>> cands;  // per position (i,j)
    std::vector<int> c;                        // current assignment, -1 = free
    std::vector<uint8_t> done;                 // k^3 triple flags
    std::vector<int> trail;
    long long nodes = 0;
    long long budget;
    bool exceeded = false;
    std::vector<std::vector<uint16_t>> out;    // complete assignments

    StructureSearch(const GroupTable& g, long long budget)
        : grp(g), k(g.k), kk(g.k * g.k), c(size_t(g.k) * g.k, -1),
          done(size_t(g.k) * g.k * g.k, 0), budget(budget) {
        cands.resize(kk);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                int lim = std::gcd(grp.factors[i], grp.factors[j]);
                for (int e = 0; e < grp.n; ++e)
                    if (lim % grp.order_of[e] == 0)
                        cands[i * k + j].push_back(uint16_t(e));
            }
    }

    // -1 violated, 0 not yet decidable, 1 holds
    int eval_triple(int i, int j, int l) const {
        int cij = c[i * k + j];
        if (cij < 0) return 0;
        int cjl = c[j * k + l];
        if (cjl < 0) return 0;
        int lhs = 0;
        for (int m = 0; m < k; ++m) {
            int s = grp.coords[cij][m];
            if (!s) continue;
            int cml = c[m * k + l];
            if (cml < 0) return 0;
            lhs = grp.add_at(lhs, grp.times_tab[cml][s]);
        }
        int rhs = 0;
        for (int m = 0; m < k; ++m) {
            int s = grp.coords[cjl][m];
            if (!s) continue;
            int cim = c[i * k + m];
            if (cim < 0) return 0;
            rhs = grp.add_at(rhs, grp.times_tab[cim][s]);
        }
        return lhs == rhs ? 1 : -1;
    }

    void dfs(int pos) {
        if (pos == kk) {
            out.emplace_back(c.begin(), c.end());
            return;
        }
        for (uint16_t v : cands[pos]) {
            if (++nodes > budget) {
                exceeded = true;
                return;
            }
            c[pos] = v;
            size_t frame = trail.size();
            bool ok = true;
            for (int t = 0; t < k * k * k && ok; ++t) {
                if (done[t]) continue;
                int r = eval_triple(t / (k * k), t / k % k, t % k);
                if (r < 0) ok = false;
                else if (r > 0) {
                    done[t] = 1;
                    trail.push_back(t);
                }
            }
            if (ok) dfs(pos + 1);
            for (size_t x = frame; x < trail.size(); ++x) done[trail[x]] = 0;
            trail.resize(frame);
            c[pos] = -1;
            if (exceeded) return;
        }
    }
};

FiniteRing expand_structure(const GroupTable& grp,
                            const std::vector<uint16_t>& c) {
    FiniteRing r;
    r.n = grp.n;
    r.add = grp.add;
    r.mul.resize(size_t(grp.n) * grp.n);
    const int k = grp.k;
    for (int a = 0; a < grp.n; ++a)
        for (int b = 0; b < grp.n; ++b) {
            int acc = 0;
            for (int i = 0; i < k; ++i) {
                int ai = grp.coords[a][i];
                if (!ai) continue;
                for (int j = 0; j < k; ++j) {
                    int bj = grp.coords[b][j];
                    if (!bj) continue;
                    acc = grp.add_at(acc, grp.scalar(ai * bj, c[i * k + j]));
                }
            }
            r.mul[size_t(a) * grp.n + b] = uint16_t(acc);
        }
    return r;
}

// Search one group, splitting the first generator product across worker
// threads. Each top-level branch runs on its own deterministic budget share,
// so results are byte-identical for every jobs value.
void search_group(const GroupTable& grp, long long budget, int jobs,
                  std::vector<std::vector<uint16_t>>& raw, long long& nodes,
                  bool& exceeded) {
    StructureSearch proto(grp, budget);
    const auto& top = proto.cands[0];
    const int branches = int(top.size());
    long long share = std::max<long long>(1, budget / branches);

    std::vector<StructureSearch> workers;
    workers.reserve(branches);
    for (int b = 0; b < branches; ++b) workers.emplace_back(grp, share);

    auto run_branch = [&](int b) {
        StructureSearch& s = workers[b];
        if (++s.nodes > s.budget) {
            s.exceeded = true;
            return;
        }
        s.c[0] = top[b];
        bool ok = true;
        for (int t = 0; t < s.k * s.k * s.k && ok; ++t) {
            int r = s.eval_triple(t / (s.k * s.k), t / s.k % s.k, t % s.k);
            if (r < 0) ok = false;
            else if (r > 0) s.done[t] = 1;
        }
        if (ok) s.dfs(1);
    };

    if (jobs <= 1 || branches <= 1) {
        for (int b = 0; b < branches; ++b) run_branch(b);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        int workers_n = std::min(jobs, branches);
        for (int w = 0; w < workers_n; ++w)
            pool.emplace_back([&] {
                for (int b = next.fetch_add(1); b < branches;
                     b = next.fetch_add(1))
                    run_branch(b);
            });
        for (auto& th : pool) th.join();
    }

    for (int b = 0; b < branches; ++b) {
        nodes += workers[b].nodes;
        exceeded = exceeded || workers[b].exceeded;
        for (auto& t : workers[b].out) raw.push_back(std::move(t));
    }
}

bool valid_invariant_chain(const std::vector<int>& factors, int order) {
    if (factors.empty()) return false;
    long long prod = 1;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) return false;
        if (i && factors[i - 1] % factors[i] != 0) return false;
        prod *= factors[i];
    }
    return prod == order;
}

}  // namespace

EnumerationResult enumerate_rings(const EnumerationSpec& spec) {
    if (spec.order < 2 || spec.order > 16)
        throw UnsupportedOrder("enumeration supports orders 2..16, got " +
                               std::to_string(spec.order));
    if (spec.node_budget <= 0) throw Error("node budget must be positive");

    std::vector<std::vector<int>> groups;
    if (spec.group) {
        if (!valid_invariant_chain(*spec.group, spec.order))
            throw UnsupportedOrder(
                "group selector is not an invariant-factor chain for order " +
                std::to_string(spec.order));
        groups.push_back(*spec.group);
    } else {
        groups = abelian_groups(spec.order);
    }

    EnumerationResult result;
    for (const auto& factors : groups) {
        GroupTable grp = GroupTable::build(factors);
        std::vector<std::vector<uint16_t>> raw;
        long long remaining = spec.node_budget - result.nodes;
        if (remaining <= 0) {
            result.exhaustive = false;
            break;
        }
        bool exceeded = false;
        search_group(grp, remaining, std::max(1, spec.jobs), raw, result.nodes,
                     exceeded);
        if (exceeded) result.exhaustive = false;

        for (const auto& c : raw) {
            FiniteRing ring = expand_structure(grp, c);
            if (spec.require_noncommutative && is_commutative(ring)) continue;
            if (spec.require_zero_center && center(ring).size() != 1) continue;
            bool duplicate = false;
            for (size_t i = result.rings.size(); i-- > 0;) {
                const FiniteRing& rep = result.rings[i];
                if (rep.add != ring.add) break;  // previous additive group
                if (ring_iso(ring, rep)) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) continue;
            ring.name = "r" + std::to_string(spec.order) + "_" +
                        std::to_string(result.rings.size());
            result.rings.push_back(std::move(ring));
        }
    }
    return result;
}

std::string manifest_path(const std::string& dir, int order) {
    return (std::filesystem::path(dir) /
            ("manifest_" + std::to_string(order) + ".json"))
        .string();
}

void write_corpus(const std::string& dir, const EnumerationSpec& spec,
                  const EnumerationResult& result) {
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json j;
    j["format"] = "commring-manifest/1";
    j["order"] = spec.order;
    j["filters"] = {{"noncommutative", spec.require_noncommutative},
                    {"zero_center", spec.require_zero_center}};
    std::string sel;
    if (spec.group)
        for (size_t i = 0; i < spec.group->size(); ++i)
            sel += (i ? "x" : "") + std::to_string((*spec.group)[i]);
    j["group"] = sel;
    j["count"] = int(result.rings.size());
    j["exhaustive"] = result.exhaustive;
    j["nodes"] = result.nodes;
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const auto& r : result.rings) {
        std::string fname = r.name + ".ring";
        write_ring_file(r, (std::filesystem::path(dir) / fname).string());
        files.push_back(fname);
    }
    j["files"] = std::move(files);
    std::ofstream out(manifest_path(dir, spec.order), std::ios::binary);
    if (!out) throw Error("cannot write manifest in " + dir);
    out << j.dump(2) << "\n";
}

std::optional<CorpusManifest> read_manifest(const std::string& dir, int order) {
    std::ifstream in(manifest_path(dir, order), std::ios::binary);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid manifest: " + std::string(e.what()));
    }
    if (j.value("format", "") != "commring-manifest/1")
        throw ParseError("not a commring-manifest/1 object");
    CorpusManifest m;
    m.order = j.value("order", 0);
    m.noncommutative = j["filters"].value("noncommutative", false);
    m.zero_center = j["filters"].value("zero_center", false);
    m.group_selector = j.value("group", "");
    m.count = j.value("count", 0);
    m.exhaustive = j.value("exhaustive", false);
    m.nodes = j.value("nodes", 0LL);
    for (const auto& f : j["files"]) m.files.push_back(f.get<std::string>());
    if (int(m.files.size()) != m.count)
        throw ParseError("manifest count disagrees with file list");
    return m;
}

std::vector<FiniteRing> read_corpus_rings(const std::string& dir,
                                          const CorpusManifest& manifest) {
    std::vector<FiniteRing> rings;
    rings.reserve(manifest.files.size());
    for (const auto& f : manifest.files)
        rings.push_back(
            read_ring_file((std::filesystem::path(dir) / f).string()));
    return rings;
}

}  // namespace commring

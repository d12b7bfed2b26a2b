#include "commring/ring.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "commring/errors.hpp"

namespace commring {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<uint16_t> flatten_table(const std::vector<std::vector<int>>& t,
                                    int n) {
    std::vector<uint16_t> out(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[size_t(a) * n + b] = uint16_t(t[a][b]);
    return out;
}

}  // namespace

FiniteRing validate_ring(const std::vector<std::vector<int>>& add,
                         const std::vector<std::vector<int>>& mul,
                         std::string name) {
    const int n = int(add.size());
    if (n < 1) throw NotAbelianGroup("empty addition table", -1, -1, -1);
    if (int(mul.size()) != n)
        throw NotAbelianGroup("addition and multiplication tables disagree on order",
                              -1, -1, -1);
    for (const auto* t : {&add, &mul})
        for (int a = 0; a < n; ++a) {
            if (int((*t)[a].size()) != n)
                throw NotAbelianGroup("table row " + std::to_string(a) +
                                          " has wrong length",
                                      a, -1, -1);
            for (int b = 0; b < n; ++b)
                if ((*t)[a][b] < 0 || (*t)[a][b] >= n)
                    throw NotAbelianGroup("table entry out of range at (" +
                                              std::to_string(a) + "," +
                                              std::to_string(b) + ")",
                                          a, b, -1);
        }

    FiniteRing r;
    r.n = n;
    r.add = flatten_table(add, n);
    r.mul = flatten_table(mul, n);
    r.name = std::move(name);

    // element 0 is the additive identity
    for (int a = 0; a < n; ++a)
        if (r.add_at(0, a) != a || r.add_at(a, 0) != a)
            throw NotAbelianGroup("0 is not an additive identity at element " +
                                      std::to_string(a),
                                  0, a, -1);
    // commutativity of add
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (r.add_at(a, b) != r.add_at(b, a))
                throw NotAbelianGroup("addition not commutative at (" +
                                          std::to_string(a) + "," +
                                          std::to_string(b) + ")",
                                      a, b, -1);
    // associativity of add
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)))
                    throw NotAbelianGroup("addition not associative at (" +
                                              std::to_string(a) + "," +
                                              std::to_string(b) + "," +
                                              std::to_string(c) + ")",
                                          a, b, c);
    // inverses
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n && !found; ++b) found = r.add_at(a, b) == 0;
        if (!found)
            throw NotAbelianGroup("element " + std::to_string(a) +
                                      " has no additive inverse",
                                  a, -1, -1);
    }

    // associativity of mul
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)))
                    throw NotAssociativeMul("multiplication not associative at (" +
                                                std::to_string(a) + "," +
                                                std::to_string(b) + "," +
                                                std::to_string(c) + ")",
                                            a, b, c);

    // distributivity, both sides
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.mul_at(a, r.add_at(b, c)) !=
                    r.add_at(r.mul_at(a, b), r.mul_at(a, c)))
                    throw NotDistributive("a(b+c) != ab+ac at (" +
                                              std::to_string(a) + "," +
                                              std::to_string(b) + "," +
                                              std::to_string(c) + ")",
                                          a, b, c);
                if (r.mul_at(r.add_at(b, c), a) !=
                    r.add_at(r.mul_at(b, a), r.mul_at(c, a)))
                    throw NotDistributive("(b+c)a != ba+ca at (" +
                                              std::to_string(a) + "," +
                                              std::to_string(b) + "," +
                                              std::to_string(c) + ")",
                                          a, b, c);
            }

    return r;
}

ElementSet center(const FiniteRing& r) {
    ElementSet z(r.n);
    for (int a = 0; a < r.n; ++a) {
        bool central = true;
        for (int b = 0; b < r.n && central; ++b)
            central = r.mul_at(a, b) == r.mul_at(b, a);
        if (central) z.bits.set(a);
    }
    return z;
}

ElementSet centralizer(const FiniteRing& r, int a) {
    ElementSet c(r.n);
    for (int b = 0; b < r.n; ++b)
        if (r.mul_at(a, b) == r.mul_at(b, a)) c.bits.set(b);
    return c;
}

int additive_order(const FiniteRing& r, int a) {
    int acc = a;
    int k = 1;
    while (acc != 0) {
        acc = r.add_at(acc, a);
        ++k;
    }
    return k;
}

bool is_commutative(const FiniteRing& r) {
    for (int a = 0; a < r.n; ++a)
        for (int b = a + 1; b < r.n; ++b)
            if (r.mul_at(a, b) != r.mul_at(b, a)) return false;
    return true;
}

bool has_unity(const FiniteRing& r) {
    for (int e = 0; e < r.n; ++e) {
        bool unity = true;
        for (int a = 0; a < r.n && unity; ++a)
            unity = r.mul_at(e, a) == a && r.mul_at(a, e) == a;
        if (unity) return true;
    }
    return false;
}

namespace {

// Shared builder for E and F. Elements (a,b) of Z_p^2 at index a*p+b.
// In E, (a,b)(c,d) = (a(c+d), b(c+d)); in F, (a,b)(c,d) = ((a+b)c, (a+b)d).
FiniteRing presentation_ef(int p, bool variant_e, const char* tag) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    const int n = p * p;
    FiniteRing r;
    r.n = n;
    r.name = std::string(tag) + std::to_string(n);
    r.add.resize(size_t(n) * n);
    r.mul.resize(size_t(n) * n);
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    int u = a * p + b, v = c * p + d;
                    r.add[size_t(u) * n + v] =
                        uint16_t(((a + c) % p) * p + (b + d) % p);
                    int e, f;
                    if (variant_e) {
                        e = a * (c + d) % p;
                        f = b * (c + d) % p;
                    } else {
                        e = (a + b) * c % p;
                        f = (a + b) * d % p;
                    }
                    r.mul[size_t(u) * n + v] = uint16_t(e * p + f);
                }
    return r;
}

}  // namespace

FiniteRing presentation_E(int p) { return presentation_ef(p, true, "E"); }

FiniteRing presentation_F(int p) { return presentation_ef(p, false, "F"); }

FiniteRing zero_ring(int n) {
    FiniteRing r;
    r.n = n;
    r.name = "Z" + std::to_string(n) + "zero";
    r.add.resize(size_t(n) * n);
    r.mul.assign(size_t(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.add[size_t(a) * n + b] = uint16_t((a + b) % n);
    return r;
}

FiniteRing cyclic_ring(int n) {
    FiniteRing r;
    r.n = n;
    r.name = "Z" + std::to_string(n);
    r.add.resize(size_t(n) * n);
    r.mul.resize(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add[size_t(a) * n + b] = uint16_t((a + b) % n);
            r.mul[size_t(a) * n + b] = uint16_t(a * b % n);
        }
    return r;
}

FiniteRing direct_product(const std::vector<FiniteRing>& rings, int max_order) {
    if (rings.empty()) throw Error("direct_product needs at least one ring");
    long long order = 1;
    for (const auto& r : rings) {
        order *= r.n;
        if (order > max_order)
            throw OverflowGuard("product order " + std::to_string(order) +
                                "+ exceeds cap " + std::to_string(max_order));
    }
    const int t = int(rings.size());
    const int n = int(order);

    // strides for the mixed-radix encoding, first coordinate most significant
    std::vector<int> stride(t, 1);
    for (int i = t - 2; i >= 0; --i) stride[i] = stride[i + 1] * rings[i + 1].n;

    FiniteRing out;
    out.n = n;
    for (int i = 0; i < t; ++i) {
        if (i) out.name += "x";
        out.name += rings[i].name.empty() ? ("R" + std::to_string(i)) : rings[i].name;
    }
    out.add.resize(size_t(n) * n);
    out.mul.resize(size_t(n) * n);

    std::vector<int> ca(t), cb(t);
    for (int a = 0; a < n; ++a) {
        int rest = a;
        for (int i = 0; i < t; ++i) {
            ca[i] = rest / stride[i];
            rest %= stride[i];
        }
        for (int b = 0; b < n; ++b) {
            rest = b;
            for (int i = 0; i < t; ++i) {
                cb[i] = rest / stride[i];
                rest %= stride[i];
            }
            int s = 0, m = 0;
            for (int i = 0; i < t; ++i) {
                s += rings[i].add_at(ca[i], cb[i]) * stride[i];
                m += rings[i].mul_at(ca[i], cb[i]) * stride[i];
            }
            out.add[size_t(a) * n + b] = uint16_t(s);
            out.mul[size_t(a) * n + b] = uint16_t(m);
        }
    }
    return out;
}

namespace {

// Per-element invariant used both as a multiset fingerprint and as a
// per-candidate filter during iso search.
using ElemFp = std::tuple<int, int, bool, int>;

ElemFp elem_fingerprint(const FiniteRing& r, int a) {
    int sq = r.mul_at(a, a);
    return {additive_order(r, a), centralizer(r, a).size(), sq == a,
            additive_order(r, sq)};
}

struct IsoSearch {
    const FiniteRing& r1;
    const FiniteRing& r2;
    std::vector<ElemFp> fp1, fp2;
    std::vector<int> phi;        // r1 element -> r2 element, -1 unassigned
    std::vector<char> used;      // r2 element already an image
    std::vector<int> assigned;   // r1 elements with an image, insertion order

    explicit IsoSearch(const FiniteRing& a, const FiniteRing& b)
        : r1(a), r2(b), phi(a.n, -1), used(b.n, 0) {
        fp1.reserve(a.n);
        fp2.reserve(b.n);
        for (int e = 0; e < a.n; ++e) fp1.push_back(elem_fingerprint(a, e));
        for (int e = 0; e < b.n; ++e) fp2.push_back(elem_fingerprint(b, e));
    }

    void bind(int a, int b, std::vector<int>& trail) {
        phi[a] = b;
        used[b] = 1;
        assigned.push_back(a);
        trail.push_back(a);
    }

    void unbind(const std::vector<int>& trail) {
        for (int a : trail) {
            used[phi[a]] = 0;
            phi[a] = -1;
        }
        assigned.resize(assigned.size() - trail.size());
    }

    // Multiplicative consistency over pairs that involve at least one element
    // from new_from onward. Products outside the assigned set must map to an
    // unused target, otherwise injectivity would fail later.
    bool mul_consistent(size_t new_from) const {
        for (size_t i = 0; i < assigned.size(); ++i)
            for (size_t j = std::max(i, new_from); j < assigned.size(); ++j)
                for (auto [a, b] : {std::pair{assigned[i], assigned[j]},
                                    std::pair{assigned[j], assigned[i]}}) {
                    int p1 = r1.mul_at(a, b);
                    int p2 = r2.mul_at(phi[a], phi[b]);
                    if (phi[p1] >= 0) {
                        if (phi[p1] != p2) return false;
                    } else if (used[p2]) {
                        return false;
                    }
                }
        return true;
    }

    // Try generator image g -> h: extend phi over the additive closure of the
    // current subgroup and g. The subgroup splits into cosets S + k*g for
    // 0 <= k < q, where q is the least k > 0 with k*g already assigned.
    bool extend(int g, int h, std::vector<int>& trail) {
        int q = 1;
        int acc = g;
        while (phi[acc] < 0) {
            acc = r1.add_at(acc, g);
            ++q;
        }
        // q*g lands in the old subgroup; its image must already agree
        if (phi[acc] != r2.times(q, h)) return false;

        size_t old_count = assigned.size();
        int kg = 0, kh = 0;
        for (int k = 1; k < q; ++k) {
            kg = r1.add_at(kg, g);
            kh = r2.add_at(kh, h);
            for (size_t i = 0; i < old_count; ++i) {
                int s = assigned[i];
                int e1 = r1.add_at(s, kg);
                int e2 = r2.add_at(phi[s], kh);
                if (phi[e1] >= 0) {
                    if (phi[e1] != e2) return false;
                } else {
                    if (used[e2]) return false;
                    if (fp1[e1] != fp2[e2]) return false;
                    bind(e1, e2, trail);
                }
            }
        }
        return mul_consistent(old_count);
    }

    bool search() {
        // next generator: smallest unassigned element of r1
        int g = -1;
        for (int a = 0; a < r1.n; ++a)
            if (phi[a] < 0) {
                g = a;
                break;
            }
        if (g < 0) return verify();

        for (int h = 0; h < r2.n; ++h) {
            if (used[h] || fp1[g] != fp2[h]) continue;
            std::vector<int> trail;
            if (extend(g, h, trail) && search()) return true;
            unbind(trail);
        }
        return false;
    }

    bool verify() const {
        for (int a = 0; a < r1.n; ++a)
            for (int b = 0; b < r1.n; ++b) {
                if (phi[r1.add_at(a, b)] != r2.add_at(phi[a], phi[b])) return false;
                if (phi[r1.mul_at(a, b)] != r2.mul_at(phi[a], phi[b])) return false;
            }
        return true;
    }
};

}  // namespace

std::optional<std::vector<int>> ring_iso(const FiniteRing& r1,
                                         const FiniteRing& r2) {
    if (r1.n != r2.n) return std::nullopt;
    IsoSearch s(r1, r2);

    auto sorted1 = s.fp1;
    auto sorted2 = s.fp2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;

    std::vector<int> root;
    s.bind(0, 0, root);  // additive identities must correspond
    if (s.search()) return s.phi;
    return std::nullopt;
}

}  // namespace commring

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commring/bitvec.hpp"

namespace commring {

/// A finite ring given by full operation tables. Elements are the indices
/// 0..n-1 with 0 the additive identity. A unity is not required.
///
/// Instances are immutable once built; construct them through validate_ring
/// or one of the builders below, which guarantee the ring axioms.
struct FiniteRing {
    int n = 0;
    std::vector<uint16_t> add;  // n*n, row-major
    std::vector<uint16_t> mul;  // n*n, row-major
    std::string name;           // optional label, "" if unnamed

    int add_at(int a, int b) const { return add[size_t(a) * n + b]; }
    int mul_at(int a, int b) const { return mul[size_t(a) * n + b]; }

    /// Additive inverse of a.
    int neg(int a) const {
        for (int b = 0; b < n; ++b)
            if (add_at(a, b) == 0) return b;
        return -1;  // unreachable on a validated ring
    }

    /// k*a under repeated addition (k >= 0).
    int times(int k, int a) const {
        int acc = 0;
        for (int i = 0; i < k; ++i) acc = add_at(acc, a);
        return acc;
    }
};

/// A subset of a ring's elements, e.g. a center or centralizer.
struct ElementSet {
    int universe = 0;  // ring order n
    BitVec bits;

    ElementSet() = default;
    explicit ElementSet(int n) : universe(n), bits(n) {}

    bool contains(int a) const { return bits.test(a); }
    int size() const { return bits.count(); }
    std::vector<int> elements() const { return bits.to_vector(); }
    bool operator==(const ElementSet& o) const = default;
};

/// Checks the ring axioms on a pair of operation tables and returns the
/// validated ring. Checks run in order: abelian group under add (identity 0,
/// commutativity, associativity, inverses), associativity of mul, then
/// two-sided distributivity; the first violation is reported with its
/// witnessing triple.
///
/// Throws NotAbelianGroup, NotAssociativeMul or NotDistributive.
FiniteRing validate_ring(const std::vector<std::vector<int>>& add,
                         const std::vector<std::vector<int>>& mul,
                         std::string name = "");

/// { a : ab = ba for all b }. Always contains 0.
ElementSet center(const FiniteRing& r);

/// { b : ab = ba }. Contains 0 and a; an additive subgroup of (R,+).
ElementSet centralizer(const FiniteRing& r, int a);

/// Least k >= 1 with k*a = 0.
int additive_order(const FiniteRing& r, int a);

bool is_commutative(const FiniteRing& r);

/// True iff some e satisfies ea = ae = a for all a.
bool has_unity(const FiniteRing& r);

/// The ring E of order p^2: generators x, y with px = py = 0, x^2 = x,
/// y^2 = y, xy = x, yx = y, extended bilinearly. Element (a,b) ~ a*x + b*y
/// has index a*p + b. Non-commutative with zero center for every prime p.
FiniteRing presentation_E(int p);

/// The mirror ring F of order p^2: as E but with xy = y, yx = x.
FiniteRing presentation_F(int p);

/// Zero ring on Z_n: cyclic addition, every product 0.
FiniteRing zero_ring(int n);

/// Z/nZ with the usual multiplication.
FiniteRing cyclic_ring(int n);

/// Componentwise product. Element (a_1,...,a_t) gets the mixed-radix index
/// a_1*(n_2*...*n_t) + ... + a_t (first coordinate most significant).
/// Throws OverflowGuard if the product order exceeds max_order.
FiniteRing direct_product(const std::vector<FiniteRing>& rings,
                          int max_order = 4096);

/// Searches for a ring isomorphism r1 -> r2 by backtracking over images of
/// additive generators. Returns the bijection as a vector (phi[a] = image),
/// or nullopt. For r1 == r2 the identity is found first.
std::optional<std::vector<int>> ring_iso(const FiniteRing& r1,
                                         const FiniteRing& r2);

bool is_prime(int n);

}  // namespace commring
